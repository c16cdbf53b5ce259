"""Shared generators for the test suite."""

from __future__ import annotations

import random

from butson.groups import CosetReps, GroupSpec, SubgroupU, default_R


def random_coset_reps(spec: GroupSpec, U: SubgroupU, rng: random.Random) -> CosetReps:
    """A complete system of representatives: each default rep moved by a random element of U."""
    members = list(U.elements(spec))
    reps = [default_R(spec, U).elements[0]]
    for r in default_R(spec, U).elements[1:]:
        reps.append(spec.add(r, rng.choice(members)))
    rest = reps[1:]
    rng.shuffle(rest)
    return CosetReps(tuple([reps[0]] + rest))
