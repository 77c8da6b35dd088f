"""Exact Newton-Puiseux expansion and arithmetic for algebraic series."""

try:
    from ._puiseux import (  # noqa: F401
        PuiseuxError,
        admissible_edges,
        combine,
        encode,
        equal,
        expand,
        refine,
        render_svg,
        support_hull,
        validate,
    )
except ImportError:  # in-tree builds put the module on sys.path directly
    from _puiseux import (  # noqa: F401
        PuiseuxError,
        admissible_edges,
        combine,
        encode,
        equal,
        expand,
        refine,
        render_svg,
        support_hull,
        validate,
    )

__all__ = [
    "PuiseuxError",
    "admissible_edges",
    "combine",
    "encode",
    "equal",
    "expand",
    "refine",
    "render_svg",
    "support_hull",
    "validate",
]
