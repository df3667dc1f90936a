import argparse
from typing import List

from ..core.gaussian import GaussInt
from ..core.scheme import AssociationScheme
from ..exceptions import PreconditionError


def gaussian_integer(text: str) -> GaussInt:
    """argparse type for a+bi arguments"""
    try:
        return GaussInt.parse(text)
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e))


def emit_json(model, out):
    print(model.model_dump_json(), file=out)


def format_set(items) -> str:
    return "{" + ", ".join(str(x) for x in items) + "}"


def parse_class_list(scheme: AssociationScheme, text: str) -> List[int]:
    """Class indices from "0,2" or from Gaussian representatives like "0,1+i" """
    classes = []
    for token in text.split(','):
        token = token.strip()
        if not token:
            continue
        if 'i' in token:
            classes.append(scheme.class_of_residue(GaussInt.parse(token)))
        else:
            try:
                k = int(token)
            except ValueError:
                raise PreconditionError(f"{token!r} is neither a class index nor a Gaussian integer")
            if not 0 <= k <= scheme.d:
                raise PreconditionError(f"class {k} out of range 0..{scheme.d}")
            classes.append(k)
    return sorted(set(classes) | {0})
