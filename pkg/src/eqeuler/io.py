"""JSON reading and writing for groups, complexes and reports."""

from __future__ import annotations

import hashlib
import json
import sys
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .errors import InputError, InvalidActionData, InvalidPermutation
from .gcomplex import GSimplicialComplex, validate_and_subdivide
from .group_core import generate_group

VERSION = "0.1.0"


def rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj):
    """Recursively convert Fractions to "a/b" and cyclotomics to their dicts."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, Cyclotomic):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def fingerprint(data):
    return hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()


def read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from None


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InvalidPermutation(f"{what} must be a list of integers")
    return value


def group_to_json(G):
    return {"degree": G.degree, "generators": [list(G.elements[g].images) for g in G.generators]}


def group_from_json(data):
    if not isinstance(data, dict) or "degree" not in data or "generators" not in data:
        raise InputError('group JSON needs "degree" and "generators"')
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise InvalidPermutation("degree must be a positive integer")
    gens = data["generators"]
    if not isinstance(gens, list):
        raise InvalidPermutation("generators must be a list")
    return generate_group(degree, [_int_list(g, "generator") for g in gens])


def complex_from_json(G, data):
    if not isinstance(data, dict):
        raise InvalidActionData("complex JSON must be an object")
    try:
        n = data["vertices"]
        simplices = data["simplices"]
        images = data["action"]["generator_images"]
    except (KeyError, TypeError):
        raise InvalidActionData('complex JSON needs "vertices", "simplices" and "action.generator_images"') from None
    if not isinstance(n, int) or n < 1:
        raise InvalidActionData("vertices must be a positive integer")
    if not isinstance(simplices, list) or not isinstance(images, list):
        raise InvalidActionData("simplices and generator_images must be lists")
    simplices = [_int_list(s, "simplex") for s in simplices]
    images = [_int_list(p, "generator image") for p in images]
    return validate_and_subdivide(GSimplicialComplex.from_data(G, n, simplices, images))


def bundle(G, X):
    return {"group": group_to_json(G), "complex": X.to_json()}


def load_inputs(paths):
    """(group, complex, raw inputs) from either a bundle or a group and a complex file."""
    if len(paths) == 1:
        data = read_json(paths[0])
        if not isinstance(data, dict) or "group" not in data or "complex" not in data:
            raise InputError('a single input must be a bundle with "group" and "complex"')
        gdata, cdata = data["group"], data["complex"]
    elif len(paths) == 2:
        gdata, cdata = read_json(paths[0]), read_json(paths[1])
    else:
        raise InputError("expected a bundle or a group file and a complex file")
    G = group_from_json(gdata)
    X = complex_from_json(G, cdata)
    return G, X, {"group": gdata, "complex": cdata}
