# Copyright (c) iasikit authors. All rights reserved.
import json
import os.path as osp
from argparse import Namespace
from typing import Any, Dict as TDict, List, Optional, Tuple

from addict import Dict

from ..utils import check_file

BASE_KEY = "_base_"
RESERVED_KEYS = ("filename", "text")


class ConfigDict(Dict):
    r"""addict Dict that raises on missing keys instead of creating them."""
    def __missing__(self, name):
        raise KeyError(name)

    def __getattr__(self, name):
        try:
            return super(ConfigDict, self).__getattr__(name)
        except KeyError:
            raise AttributeError(
                f"`{self.__class__.__name__}` object has no attribute `{name}`")


def _merge(child: dict, base: dict) -> dict:
    r"""Recursively overlay `child` on a copy of `base`.

    Example:
        >>> _merge(dict(bounds=dict(diff_max=4)),
        ...        dict(bounds=dict(diff_max=6, len_max=5)))
        {"bounds": {"diff_max": 4, "len_max": 5}}
    """
    merged = dict(base)
    for key, value in child.items():
        if isinstance(value, dict) and key in merged:
            if not isinstance(merged[key], dict):
                raise TypeError(
                    f"`{key}` is a mapping in the overriding config but "
                    f"{type(merged[key]).__name__} in the base")
            merged[key] = _merge(value, merged[key])
        else:
            merged[key] = value
    return merged


def _unflatten(options: TDict[str, Any]) -> dict:
    r"""{"bounds.diff_max": 4} -> {"bounds": {"diff_max": 4}}; None values
    are dropped."""
    nested: dict = {}
    for dotted, value in options.items():
        if value is None:
            continue
        *parents, leaf = dotted.split(".")
        node = nested
        for key in parents:
            node = node.setdefault(key, {})
        node[leaf] = value
    return nested


def _read(filename: str) -> Tuple[dict, List[str]]:
    r"""Load a json/yaml config, resolving `_base_` files relative to it.
    Returns the merged dict and the raw texts, bases first."""
    filename = osp.abspath(osp.expanduser(filename))
    check_file(filename)
    from iasikit.fileio import load
    content = dict(load(filename) or {})
    with open(filename, "r") as f:
        texts = [f.read()]

    bases = content.pop(BASE_KEY, [])
    if isinstance(bases, str):
        bases = [bases]
    merged_bases: dict = {}
    base_texts: List[str] = []
    for base in bases:
        base_dict, text = _read(osp.join(osp.dirname(filename), base))
        clash = merged_bases.keys() & base_dict.keys()
        if clash:
            raise KeyError(
                f"bases of {filename} both define {', '.join(sorted(clash))}")
        merged_bases.update(base_dict)
        base_texts += text
    return _merge(content, merged_bases), base_texts + texts


class Config(object):
    r"""Nested settings with attribute access, read from json/yaml files.

    Example:
        >>> cfg = Config(dict(bounds=dict(first_max=3, diff_max=6)))
        >>> cfg.bounds.diff_max
        6
        >>> cfg.merge_from_dict({"bounds.diff_max": 4})
        >>> cfg.bounds.diff_max
        4
    """
    def __init__(self,
                 cfg_dict: Optional[dict] = None,
                 cfg_text: Optional[str] = None,
                 filename: Optional[str] = None):
        if cfg_dict is None:
            cfg_dict = {}
        if not isinstance(cfg_dict, dict):
            raise TypeError(
                f"cfg_dict must be a dict, but got {type(cfg_dict)}")
        reserved = [key for key in cfg_dict if key in RESERVED_KEYS]
        if reserved:
            raise KeyError(f"{reserved[0]} is reserved for config file")
        if cfg_text is None and filename is not None:
            with open(filename, "r") as f:
                cfg_text = f.read()
        object.__setattr__(self, "_cfg_dict", ConfigDict(cfg_dict))
        object.__setattr__(self, "_filename", filename)
        object.__setattr__(self, "_text", cfg_text or "")

    @staticmethod
    def fromfile(filename: str) -> "Config":
        r"""Read `filename`; a top-level ``_base_`` entry (a path or a list
        of paths) names files merged underneath it.

        Raises:
            FileNotFoundError: `filename` or one of its bases is missing
        """
        cfg_dict, texts = _read(filename)
        return Config(cfg_dict, cfg_text="\n".join(texts), filename=filename)

    @property
    def filename(self) -> Optional[str]:
        return self._filename

    @property
    def text(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return (f"Config (path: {self.filename})\n"
                f"{json.dumps(self.to_dict(), indent=4)}")

    def __len__(self) -> int:
        return len(self._cfg_dict)

    def __iter__(self):
        return iter(self._cfg_dict)

    def __getattr__(self, name: str):
        return getattr(self._cfg_dict, name)

    def __getitem__(self, name: str):
        return self._cfg_dict[name]

    def __setattr__(self, name: str, value):
        self[name] = value

    def __setitem__(self, name: str, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict[name] = value

    def to_dict(self) -> dict:
        return self._cfg_dict.to_dict()

    def dump(self, file: Optional[str] = None, **kwargs) -> Optional[str]:
        r"""Write the settings to `file`, or return them as text in the
        format of the file they were read from (json by default)."""
        from iasikit.fileio import dump
        if file is not None:
            return dump(self.to_dict(), file, **kwargs)
        file_format = (self.filename or "cfg.json").rsplit(".", 1)[-1]
        return dump(self.to_dict(), file_format=file_format, **kwargs)

    def merge_from_dict(self, options: TDict[str, Any]):
        r"""Overlay dotted-key options, e.g. ``{"bounds.diff_max": 4}``.
        `None` values are skipped so unset command-line flags keep the
        current values."""
        merged = _merge(_unflatten(options), self.to_dict())
        object.__setattr__(self, "_cfg_dict", ConfigDict(merged))


def merge_cfg_and_args(cfg: Optional[Config] = None,
                       args: Optional[Namespace] = None) -> Config:
    r"""Overlay parsed command-line arguments on `cfg`.

    Attribute names may use "__" for nesting: ``bounds__diff_max`` updates
    ``cfg.bounds.diff_max``. Arguments left at None are ignored.
    """
    assert cfg is not None or args is not None, \
        "'cfg' or 'args' can not be None simultaneously"
    cfg = Config() if cfg is None else cfg
    assert isinstance(cfg, Config), \
        f"'cfg' must be None or iasikit.Config, but got {type(cfg)}"
    args = Namespace() if args is None else args
    assert isinstance(args, Namespace), \
        f"'args' must be None or argparse.Namespace, but got {type(args)}"
    cfg.merge_from_dict(
        {k.replace("__", "."): v for k, v in vars(args).items()})
    return cfg


def default_config() -> Config:
    r"""The built-in defaults: audit search bounds, construction parameters,
    graph family size and logging level."""
    return Config(
        dict(bounds=dict(first_max=3, diff_max=6, len_min=3, len_max=5),
             construct=dict(m=3, n=4, d=1, k=None),
             family=dict(max_vertices=6),
             audit=dict(nproc=1, progress=False),
             log_level="WARNING"))
