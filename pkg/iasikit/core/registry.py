# Copyright (c) iasikit authors. All rights reserved.
import inspect
from typing import Any, Callable, Dict, Iterator, Optional, Tuple

from tabulate import tabulate
from termcolor import colored


class Registry:
    r"""Name -> object table, so audits, labelers and transforms can be
    picked by name from the command line or a config file.

    Example:
        >>> LABELERS = Registry("labelers")
        >>> @LABELERS.register(name="iso")
        ... def isoarithmetic(graph, d=1, size=3):
        ...     ...
        >>> LABELERS.get("iso") is isoarithmetic
        True
    """
    def __init__(self, name: str):
        self._name = name
        self._entries: Dict[str, Any] = {}

    @property
    def name(self) -> str:
        return self._name

    def _add(self, name: str, obj: Any, force: bool):
        if name in self._entries and not force:
            raise KeyError(f"'{name}' is already registered in the "
                           f"'{self._name}' registry; pass force=True to "
                           "replace it")
        self._entries[name] = obj

    def register(self,
                 obj: Any = None,
                 name: Optional[str] = None,
                 force: bool = False) -> Any:
        r"""Add `obj` under `name` (default ``obj.__name__``). Without `obj`
        this returns a decorator."""
        if obj is not None:
            self._add(name or obj.__name__, obj, force)
            return obj

        def deco(target: Callable) -> Callable:
            self._add(name or target.__name__, target, force)
            return target

        return deco

    def get(self, name: str) -> Any:
        try:
            return self._entries[name]
        except KeyError:
            raise KeyError(f"nothing named '{name}' in the "
                           f"'{self._name}' registry") from None

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self) -> Iterator[Tuple[str, Any]]:
        return iter(self._entries.items())

    def __repr__(self) -> str:
        rows = [(colored(key, "blue"), value)
                for key, value in self._entries.items()]
        body = tabulate(rows,
                        headers=[colored("Names", "red"),
                                 colored("Objects", "green")],
                        tablefmt="fancy_grid")
        return f"Registry of {self._name}:\n{body}"

    __str__ = __repr__


def build_from_cfg(cfg: Dict,
                   registry: Registry,
                   default_args: Optional[Dict] = None) -> Any:
    r"""Call the entry named by ``cfg["type"]`` with the remaining keys.

    Keys of `default_args` fill in what `cfg` leaves out. ``type`` may also
    be a class or a callable, which is then used directly.

    Raises:
        KeyError: no ``type`` anywhere, or an unregistered name
        TypeError: malformed arguments, or the call rejected them
    """
    if not isinstance(cfg, dict):
        raise TypeError(f"cfg must be a dict, but got {type(cfg)}")
    if not isinstance(registry, Registry):
        raise TypeError(f"registry must be an iasikit.Registry object, "
                        f"but got {type(registry)}")
    if default_args is not None and not isinstance(default_args, dict):
        raise TypeError(f"default_args must be a dict or None, "
                        f"but got {type(default_args)}")

    args = {**(default_args or {}), **cfg}
    if "type" not in args:
        raise KeyError(f"`cfg` or `default_args` must contain the key "
                       f"'type', but got {cfg}")
    target = args.pop("type")
    if isinstance(target, str):
        target = registry.get(target)
    elif not (inspect.isclass(target) or callable(target)):
        raise TypeError(
            f"type must be a str or valid type, but got {type(target)}")
    try:
        return target(**args)
    except TypeError as e:
        raise TypeError(f"{target.__name__}: {e}") from e
