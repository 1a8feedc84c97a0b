"""Fuzzy rule-based corner detector with a Harris baseline."""

from ._core import (
    PgmError,
    TemplateError,
    blur,
    brighten,
    cornerness_map,
    darken,
    default_template_text,
    detect_fuzzy,
    harris_detect,
    harris_response,
    impulse_noise,
    make_corpus,
    match_corners,
    noise_immunity,
    read_pgm,
    select_corners,
    stability,
    standard_rectangle,
    write_pgm,
)

__all__ = [
    "PgmError",
    "TemplateError",
    "blur",
    "brighten",
    "cornerness_map",
    "darken",
    "default_template_text",
    "detect_fuzzy",
    "harris_detect",
    "harris_response",
    "impulse_noise",
    "make_corpus",
    "match_corners",
    "noise_immunity",
    "read_pgm",
    "select_corners",
    "stability",
    "standard_rectangle",
    "write_pgm",
]
