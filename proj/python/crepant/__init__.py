"""Exact Chen-Ruan orbifold cohomology and quantum corrected resolution rings
for transversal A_n singularities."""

import json
import os
import tempfile

from ._crepant import (
    CycNum,
    DivisionByZero,
    PoleError,
    ValidationError,
    age,
    cartan_inverse,
    cartan_matrix,
    evaluate_atom,
    r_poly,
    run,
    solve_a2,
)

__all__ = [
    "CycNum",
    "DivisionByZero",
    "PoleError",
    "ValidationError",
    "age",
    "cartan_inverse",
    "cartan_matrix",
    "command",
    "evaluate_atom",
    "r_poly",
    "run",
    "solve_a2",
]


class CommandError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def command(name, config=None, **options):
    """Run a CLI subcommand and return its JSON report as a dict.

    `config` may be a path or a dict in the geometry config schema. Keyword
    options map to flags (max_order=12 -> --max-order 12; True -> bare flag).
    """
    args = [name]
    path = None
    try:
        if isinstance(config, dict):
            fd, path = tempfile.mkstemp(suffix=".json")
            with os.fdopen(fd, "w") as fh:
                json.dump(config, fh)
            args += ["--config", path]
        elif config is not None:
            args += ["--config", str(config)]
        for key, value in options.items():
            flag = "--" + key.replace("_", "-")
            if value is True:
                args.append(flag)
            elif value is not False and value is not None:
                args += [flag, str(value)]
        code, out, err = run(args)
    finally:
        if path:
            os.unlink(path)
    if code != 0:
        raise CommandError(code, err.strip())
    return json.loads(out)
