"""Exact computer algebra for linear codes over affine algebras.

The heavy lifting lives in the C++ extension ``affinecodes._core``; this
package adds thin conveniences that decode the canonical JSON reports.
"""

import json as _json

from ._core import Code, family_spec, kerdock_json, __version__

__all__ = ["Code", "family_spec", "kerdock", "kerdock_json", "load", "__version__"]


def load(path):
    """Parse a specification file into a :class:`Code`."""
    with open(path, "r", encoding="utf-8") as fh:
        return Code(fh.read())


def kerdock(d=1, m=3):
    """Generalized Kerdock presentation as a dictionary."""
    return _json.loads(kerdock_json(d, m))


def _add_json_helpers():
    for name in ("info", "cgs", "rdual", "adual", "hdual", "paritycheck", "weights"):
        json_name = name + "_json"

        def helper(self, *args, _json_name=json_name, **kwargs):
            return _json.loads(getattr(self, _json_name)(*args, **kwargs))

        helper.__name__ = name
        helper.__doc__ = f"Decoded form of :meth:`Code.{json_name}`."
        setattr(Code, name, helper)


_add_json_helpers()
del _add_json_helpers
