'''Process wide singletons for services that own expensive state (the Pint
registry, the expression evaluator).'''

from threading import RLock
from typing import Any, Callable, Dict, Type, TypeVar
from functools import wraps


__all__ = ['Singleton']


RT = TypeVar('RT')


class Singleton(type):
    '''Metaclass returning one instance per class and process.'''

    _instances: Dict[type, Any] = {}
    _functions: Dict[Callable[..., Any], Any] = {}
    _lock = RLock()

    @classmethod
    def function(cls, func: Callable[..., RT]) -> Callable[..., RT]:
        '''Decorates a factory function so that it is evaluated only once;
        later calls return the first result and ignore their arguments.
        '''

        @wraps(func)
        def _wrapper(*args: Any, **kwargs: Any) -> RT:
            with cls._lock:
                if func not in cls._functions:
                    cls._functions[func] = func(*args, **kwargs)
                return cls._functions[func]

        return _wrapper

    @classmethod
    def reset(cls, target: type) -> None:
        '''Drops the cached instance of target, the next call builds a new
        one.'''
        with cls._lock:
            cls._instances.pop(target, None)

    def __call__(cls: Type[Any], *args: Any, **kwargs: Any) -> Any:
        with Singleton._lock:
            if cls not in Singleton._instances:
                Singleton._instances[cls] = super(Singleton, cls).__call__(
                    *args, **kwargs
                )
            return Singleton._instances[cls]
