# Copyright (c) iasikit authors. All rights reserved.
import json
from abc import ABCMeta, abstractmethod

import yaml

try:
    from yaml import CSafeLoader as Loader, CSafeDumper as Dumper
except ImportError:
    from yaml import SafeLoader as Loader, SafeDumper as Dumper


def to_builtin(obj):
    r"""Turn iasikit values into plain json/yaml data: integer sets become
    sorted lists, AP descriptors ``[first, difference, length]`` lists and
    tuples lists. Anything else is returned unchanged."""
    if isinstance(obj, dict):
        return {k: to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    if hasattr(obj, "to_list"):
        return obj.to_list()
    if hasattr(obj, "as_tuple"):
        return list(obj.as_tuple())
    return obj


class BaseFileHandler(metaclass=ABCMeta):
    r"""Converts between text and python objects for one file format.

    Subclasses implement :meth:`loads` and :meth:`dumps`; reading from and
    writing to paths or open files goes through them.
    """
    @abstractmethod
    def loads(self, text: str, source: str = "<string>"):
        pass

    @abstractmethod
    def dumps(self, obj, **kwargs) -> str:
        pass

    def load_file(self, file):
        return self.loads(file.read(), source=getattr(file, "name", "<stream>"))

    def dump_file(self, obj, file, **kwargs):
        file.write(self.dumps(obj, **kwargs))

    def load_path(self, path: str):
        with open(path, "r") as f:
            return self.loads(f.read(), source=path)

    def dump_path(self, obj, path: str, **kwargs):
        with open(path, "w") as f:
            self.dump_file(obj, f, **kwargs)


class JsonHandler(BaseFileHandler):
    def loads(self, text, source="<string>"):
        return json.loads(text)

    def dumps(self, obj, **kwargs):
        kwargs.setdefault("default", to_builtin)
        return json.dumps(to_builtin(obj), **kwargs)


class YamlHandler(BaseFileHandler):
    def loads(self, text, source="<string>"):
        return yaml.load(text, Loader=Loader)

    def dumps(self, obj, **kwargs):
        kwargs.setdefault("Dumper", Dumper)
        return yaml.dump(to_builtin(obj), **kwargs)
