"""key=value command-line overrides for the dataclass configs used by the scripts."""

import dataclasses
import sys


def from_argv(cls, argv=None):
    argv = sys.argv[1:] if argv is None else argv
    kw = {}
    fields = {f.name: f for f in dataclasses.fields(cls)}
    for arg in argv:
        key, _, val = arg.partition("=")
        key = key.lstrip("-").replace("-", "_")
        if key not in fields:
            raise SystemExit(f"unknown option {key!r}; known: {', '.join(fields)}")
        default = fields[key].default
        if isinstance(default, bool):
            kw[key] = val.lower() in ("1", "true", "yes")
        elif isinstance(default, tuple):
            kw[key] = tuple(type(default[0])(v) for v in val.split(",")) if default else tuple(val.split(","))
        elif default is None:
            kw[key] = val
        else:
            kw[key] = type(default)(val)
    return cls(**kw)
