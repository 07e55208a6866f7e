"""Frozen reference values for the width-3 graph families.

Every row is machine-verified by the regression command: the recursions
must reproduce the faces exactly, the removal certificate must hold, and
the homology oracle must agree with the face dimensions.
"""

from __future__ import annotations


def _rows(raw: dict) -> dict:
    return {n: frozenset(frozenset(face) for face in faces) for n, faces in raw.items()}


# generating faces of the width-3 path-power family, vertices 1..n
SEGMENT_FACES_K3 = _rows({
    1: [],
    2: [[2]],
    3: [[2], [3]],
    4: [[2], [3]],
    5: [[3]],
    6: [[2, 6]],
    7: [[2, 6], [2, 7], [3, 7]],
    8: [[2, 6], [2, 7], [3, 7], [3, 8]],
    9: [[2, 7], [3, 7], [3, 8]],
    10: [[3, 8], [2, 6, 10]],
    11: [[2, 6, 10], [2, 6, 11], [2, 7, 11], [3, 7, 11]],
})

# generating faces of the width-3 cycle-power family, vertices 1..n
CYCLE_FACES_K3 = _rows({
    8: [[1, 5], [1, 6], [2, 6], [2, 7], [4, 8]],
    9: [[1, 5], [1, 6], [2, 6], [2, 7], [4, 8], [4, 9], [5, 9]],
    13: [[1, 5, 9], [1, 5, 10], [1, 6, 10], [1, 6, 11],
         [2, 6, 10], [2, 6, 11], [2, 7, 11], [2, 7, 12],
         [4, 8, 12], [4, 8, 13], [4, 9, 13], [5, 9, 13]],
})

# reduced mod-2 Betti vectors implied by the face dimensions above
CYCLE_BETTI_K3 = {
    8: (0, 5),
    9: (0, 7),
    13: (0, 0, 12),
}
