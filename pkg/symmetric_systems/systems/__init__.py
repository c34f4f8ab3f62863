import inspect
import logging
import pkgutil
from pathlib import Path
from typing import Union

from symmetric_systems.core.errors import ConstructionError
from symmetric_systems.systems.base import (
    AlphaPrediction,
    BuiltSystem,
    SystemBuilder,
    SystemDescriptor,
)

logger = logging.getLogger(__name__)

# --- Automatic Builder Registration System ---

SYSTEM_TYPES = {}    # {kind: builder class}
SYSTEM_ALIASES = {}  # {alias: kind}


def register_systems():
    """
    Imports every module in this package and registers each SystemBuilder
    subclass under its kind and aliases. Adding a new family of systems is a
    matter of dropping a module here.
    """
    if SYSTEM_TYPES:  # Already registered
        return

    package_dir = Path(__file__).resolve().parent
    for (_, module_name, _) in pkgutil.iter_modules([str(package_dir)]):
        module = __import__(f"{__name__}.{module_name}", fromlist=["*"])

        for _, obj in inspect.getmembers(module, inspect.isclass):
            if issubclass(obj, SystemBuilder) and obj is not SystemBuilder and obj.__module__ == module.__name__:
                SYSTEM_TYPES[obj.kind] = obj
                for alias in obj.aliases:
                    SYSTEM_ALIASES[alias] = obj.kind
                logger.debug("Registered system builder: %s", obj.kind)


def builder_for(descriptor: Union[str, SystemDescriptor]) -> SystemBuilder:
    """A configured builder for ``descriptor`` (text or parsed)."""
    if isinstance(descriptor, str):
        descriptor = SystemDescriptor.parse(descriptor)
    kind = SYSTEM_ALIASES.get(descriptor.kind, descriptor.kind)
    if kind not in SYSTEM_TYPES:
        known = ", ".join(sorted(SYSTEM_TYPES))
        raise ConstructionError(f"unknown system kind {descriptor.kind!r} (known: {known})")
    builder = SYSTEM_TYPES[kind]()
    unknown = [name for name in descriptor.as_dict() if name not in builder.parameters]
    if unknown:
        raise ConstructionError(f"{kind} does not take parameters {', '.join(unknown)}")
    return builder.configure(descriptor.as_dict())


def build_system(descriptor: Union[str, SystemDescriptor]) -> BuiltSystem:
    return builder_for(descriptor).build()


def predicted_alpha(descriptor: Union[str, SystemDescriptor]) -> AlphaPrediction:
    return builder_for(descriptor).predicted_alpha()


register_systems()
