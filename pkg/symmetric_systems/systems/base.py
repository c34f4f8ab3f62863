"""
Base class for system builders and the descriptor syntax they share.

A builder describes one family of symmetric systems: its ground set, its pair
relation, a generating set for a group acting transitively on it, and the
predicted independence number with the range where the prediction is proven.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional

from symmetric_systems.core.config import vertex_cap
from symmetric_systems.core.errors import ConstructionError, VertexCapExceeded
from symmetric_systems.core.graph import SystemGraph
from symmetric_systems.core.group import GeneratorSet, Permutation, is_transitive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SystemDescriptor:
    kind: str
    params: tuple  # ((name, value), ...) in the builder's parameter order

    @classmethod
    def parse(cls, text: str) -> "SystemDescriptor":
        """Parse ``kind:name=value,...`` such as ``subsets:n=5,k=2,t=1``."""
        if not isinstance(text, str) or ":" not in text:
            raise ConstructionError(f"malformed descriptor {text!r}, expected kind:name=value,...")
        kind, _, body = text.partition(":")
        kind = kind.strip().lower()
        params = []
        seen = set()
        for item in filter(None, (part.strip() for part in body.split(","))):
            name, sep, value = item.partition("=")
            name = name.strip()
            if not sep or not name:
                raise ConstructionError(f"malformed parameter {item!r} in descriptor {text!r}")
            if name in seen:
                raise ConstructionError(f"parameter {name!r} given twice in {text!r}")
            seen.add(name)
            try:
                params.append((name, int(value)))
            except ValueError:
                raise ConstructionError(f"parameter {name!r} must be an integer, got {value.strip()!r}") from None
        return cls(kind, tuple(params))

    def as_dict(self) -> dict:
        return dict(self.params)

    def __str__(self):
        return f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in self.params)


@dataclass(frozen=True)
class AlphaPrediction:
    value: int
    valid: bool
    condition_text: str


@dataclass
class BuiltSystem:
    descriptor: SystemDescriptor
    graph: SystemGraph
    generators: GeneratorSet
    vertices: List[Any] = field(repr=False)


class SystemBuilder:
    kind = "uncategorized"
    aliases = ()

    def __init__(self, name, params=None):
        self.name = name
        self.parameters = params if params is not None else {}

    def get_parameter(self, name):
        return self.parameters.get(name, {}).get('value')

    def set_parameter(self, name, value):
        if name not in self.parameters:
            raise ConstructionError(f"Parameter '{name}' not found in system '{self.name}'")
        self.parameters[name]['value'] = value

    def configure(self, values: dict) -> "SystemBuilder":
        missing = [name for name in self.parameters if name not in values]
        if missing:
            raise ConstructionError(f"{self.kind} needs parameters {', '.join(missing)}")
        for name, value in values.items():
            self.set_parameter(name, value)
        self.validate()
        return self

    def validate(self):
        for name, spec in self.parameters.items():
            value = spec['value']
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConstructionError(f"{self.kind}: parameter {name} must be an integer")
            low, high = spec.get('range', (None, None))
            if low is not None and value < low:
                raise ConstructionError(f"{self.kind}: parameter {name}={value} is below {low}")
            if high is not None and value > high:
                raise ConstructionError(f"{self.kind}: parameter {name}={value} is above {high}")

    def descriptor(self) -> SystemDescriptor:
        return SystemDescriptor(self.kind, tuple((name, self.get_parameter(name)) for name in self.parameters))

    # --- the system itself ------------------------------------------------------

    def vertex_count(self) -> int:
        raise NotImplementedError

    def enumerate_vertices(self) -> list:
        raise NotImplementedError

    def vertex_label(self, vertex) -> str:
        return str(vertex)

    def compatible(self, a, b) -> bool:
        """The pair relation: {a, b} is a p-subset."""
        raise NotImplementedError

    def generator_actions(self) -> list:
        """Callables mapping a vertex object to its image under one generator."""
        raise NotImplementedError

    def predicted_alpha(self) -> AlphaPrediction:
        raise NotImplementedError

    def vertex_key(self, vertex):
        return vertex

    def build(self) -> BuiltSystem:
        self.validate()
        count = self.vertex_count()
        cap = vertex_cap()
        if count > cap:
            raise VertexCapExceeded(
                f"{self.descriptor()} has {count} vertices, above the vertex cap of {cap}"
            )
        descriptor = self.descriptor()
        logger.info("Building system: %s (%d vertices)", descriptor, count)

        vertices = self.enumerate_vertices()
        index = {self.vertex_key(v): i for i, v in enumerate(vertices)}
        meta = {
            "kind": descriptor.kind,
            "params": descriptor.as_dict(),
            "descriptor": str(descriptor),
        }
        graph = SystemGraph.from_pair_relation(
            len(vertices),
            lambda u, v: self.compatible(vertices[u], vertices[v]),
            labels=[self.vertex_label(v) for v in vertices],
            meta=meta,
        )
        gens = []
        for action in self.generator_actions():
            images = tuple(index[self.vertex_key(action(v))] for v in vertices)
            gens.append(Permutation(images))
        if not gens:
            gens.append(Permutation.identity(len(vertices)))
        generators = GeneratorSet(len(vertices), tuple(gens))
        if not is_transitive(generators):
            logger.warning("Generators of %s do not act transitively", descriptor)
        return BuiltSystem(descriptor, graph, generators, vertices)
