# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Built-in scenarios by name."""

from typing import Callable

# linalg
from ..linalg import ConfigError
from ._scenario import Scenario
from ._builders import (Build_rotation, Build_diagonal, Build_eigen_orthogonal, Build_jointly_diagonalizable,
                        Build_anosov, Build_elliptic_hyperbolic, Build_jordan_skew, Build_no_cones,
                        Build_delta_basis)

CATALOG: dict[str, Callable[..., Scenario]] = {
    "rotation": Build_rotation,
    "diagonal": Build_diagonal,
    "eigen_orthogonal": Build_eigen_orthogonal,
    "jointly_diagonalizable": Build_jointly_diagonalizable,
    "anosov": Build_anosov,
    "elliptic_bounded": lambda **params: Build_elliptic_hyperbolic(bounded=True, **params),
    "elliptic_unbounded": lambda **params: Build_elliptic_hyperbolic(bounded=False, **params),
    "jordan_skew": Build_jordan_skew,
    "no_cones": Build_no_cones,
    "delta_basis": Build_delta_basis,
}
"""name -> builder"""

def Builtin_names() -> list[str]:
    return list(CATALOG.keys())

def Get_scenario(name: str, **params) -> Scenario:
    """Builds the built-in scenario name with the builder keyword parameters.

    Raises
    ------
    ConfigError
        for an unknown name or unknown parameters
    """

    builder = CATALOG.get(name)
    if builder is None:
        raise ConfigError(f"unknown scenario '{name}', built-in scenarios are: {', '.join(Builtin_names())}")
    try:
        return builder(**params)
    except TypeError as error:
        raise ConfigError(f"bad parameters for '{name}': {error}")

def Catalog_document() -> dict[str, dict]:
    """name -> expected verdicts, without building the sequences."""
    document = {}
    for name in Builtin_names():
        scenario = Get_scenario(name)
        document[name] = scenario.expected.To_dict()
    return document
