"""Registration decorator for routing methods."""

from typing import Callable, Dict, List, Optional, Type


def routing_method(name: str, *, validate: Optional[Callable] = None):
    """Class decorator that tags a router class with its method name.

    Args:
        name: Method name used on the command line
        validate: Optional check run on a circuit before routing
    """

    def decorator(cls: Type):
        cls._method_name = name
        cls._method_validate = validate
        return cls

    return decorator


class MethodRegistry:
    """Registry of router classes keyed by method name."""

    def __init__(self):
        self.routers: Dict[str, Type] = {}
        self.validators: Dict[str, Optional[Callable]] = {}

    def register(self, cls: Type) -> Type:
        """Register a class decorated with @routing_method."""
        if not hasattr(cls, "_method_name"):
            raise ValueError(f"{cls.__name__} is not decorated with @routing_method")
        self.routers[cls._method_name] = cls
        self.validators[cls._method_name] = getattr(cls, "_method_validate", None)
        return cls

    def get_router(self, name: str) -> Optional[Type]:
        return self.routers.get(name)

    def get_validator(self, name: str) -> Optional[Callable]:
        return self.validators.get(name)

    def list_methods(self) -> List[str]:
        return list(self.routers.keys())
