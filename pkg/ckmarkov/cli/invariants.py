from __future__ import annotations

import argparse

from ckmarkov.classify.invariants import (
    InvariantTriple,
    bowen_franks,
    invariant_triple,
    oriented_point,
    render_oriented,
)
from ckmarkov.dynamics.graph import is_irreducible, is_permutation_matrix
from ckmarkov.groups.abelian import FgAbelianGroup
from ckmarkov.io.matrix_file import read_matrix
from ckmarkov.schemas.invariants import GroupModel, InvariantsResponse, OrientedClassResponse
from ckmarkov.surgery.binary import BinaryMatrix


def _group_model(group: FgAbelianGroup) -> GroupModel:
    return GroupModel(factors=list(group.torsion), rank=group.free_rank, text=str(group))


def oriented_class_response(triple: InvariantTriple) -> OrientedClassResponse:
    return OrientedClassResponse(
        factors=list(triple.group.torsion),
        rank=triple.group.free_rank,
        u=list(oriented_point(triple).coords),
        sign=triple.sign,
        text=render_oriented(triple),
    )


def invariants_response(a: BinaryMatrix) -> InvariantsResponse:
    # reducible and permutation inputs are reported, not rejected
    triple = invariant_triple(a, validate=False)
    return InvariantsResponse(
        size=a.size,
        group=_group_model(triple.group),
        oriented_class=oriented_class_response(triple),
        det_one_minus=triple.determinant,
        irreducible=is_irreducible(a),
        permutation=is_permutation_matrix(a),
        bowen_franks=_group_model(bowen_franks(a)),
    )


def register(commands: argparse._SubParsersAction) -> None:
    p = commands.add_parser("invariants", help="print G(A), u_A, det(1-A) and flags")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    response = invariants_response(read_matrix(args.input))
    if args.json:
        print(response.model_dump_json(indent=2))
        return 0
    oc = response.oriented_class
    print(f"size:         {response.size}")
    print(f"G(A):         {response.group.text}")
    print(f"u_A:          {oc.u}")
    print(f"det(1-A):     {response.det_one_minus}")
    print(f"sign:         {oc.sign}")
    print(f"class:        {oc.text}")
    print(f"BF(A):        {response.bowen_franks.text}")
    print(f"irreducible:  {str(response.irreducible).lower()}")
    print(f"permutation:  {str(response.permutation).lower()}")
    return 0