"""Built-in covering systems and certificates."""
from __future__ import annotations

from .certificate import AvoidanceCertificate, fib_clauses, lucas_clauses
from .covering import CoveringSystem

FIB_QUADS = [
    (1, 3, 1, 2), (2, 3, 1, 2),
    (3, 8, 2, 3), (5, 8, 2, 3), (6, 8, 2, 3),
    (7, 16, 6, 7), (9, 16, 6, 7), (10, 16, 6, 7),
    (0, 48, 0, 23), (24, 48, 0, 23),
    (15, 32, 46, 47), (17, 32, 46, 47), (18, 32, 46, 47),
    (60, 96, 959, 1103), (84, 96, 959, 1103),
    (9, 18, 15, 19),
    (24, 36, 9, 17), (30, 36, 9, 17),
    (33, 192, 2874, 3167), (159, 192, 2874, 3167),
    (1, 64, 1, 2207), (2, 64, 1, 2207), (63, 64, 1, 2207),
    (12, 144, 144, 103681),
    (36, 288, 14930352, 10749957121), (108, 288, 14930352, 10749957121),
    (546, 576, 115561578124837690841, 115561578124838522881),
    (100, 128, 680, 1087),
    (36, 128, 4141, 4481),
    (324, 384, 10314566492783, 11862575248703),
    (162, 1152, 65243, 270143),
    (516, 1152, 1548008755920, 25033626656641),
    (738, 1152, 784086245571237641757, 1974737795746080149567),
]

LUCAS_QUADS = [
    (1, 3, 1, 2), (2, 3, 1, 2),
    (2, 4, 3, 5),
    (0, 8, 2, 3), (5, 8, 2, 3), (7, 8, 2, 3),
    (9, 16, 6, 7),
    (12, 48, 0, 23), (36, 48, 0, 23),
    (17, 32, 46, 47),
    (15, 18, 15, 19),
    (27, 36, 9, 17),
    (3, 72, 4, 107),
    (1, 64, 1, 2207),
    (33, 192, 484, 769),
]

# The 1103 clause stands in for the 2207 and 769 clauses.
LUCAS_REMARK_QUADS = [q for q in LUCAS_QUADS if q[3] not in (2207, 769)] + [(33, 96, 261, 1103)]

AUX_FIB = [17, 19, 47]
AUX_LUCAS = [19, 47]

# Published progressions, as decimal strings.
THEOREM1_M = (
    "4622887311048560370676603365714605438732035554897681130826120780882327"
    "893281434118684817634570358523156027263412324830"
)
THEOREM1_N = (
    "3939763412672581121898182599728603280412336895559113342123449529012811"
    "376139243610743695185350000191300835935299152713"
)
COROLLARY1_M = (
    "1123655508683096233894389695493505447961799048381240628277073218254640"
    "1792062598881141469403328411757364284878802"
)
COROLLARY1_N = (
    "2468127909106617673449389274478768677072124807451258375411168391979806"
    "255191037873183154992460933770371093595473"
)
COROLLARY2_M = "578938092213810"
COROLLARY2_N = "85206628521871"
COROLLARY3_M = "8653798948830"
COROLLARY3_N = "3695757248273"

# (S, T) each builtin certificate is expected to produce
EXPECTED_PROGRESSIONS = {
    "theorem1": (int(THEOREM1_M), int(THEOREM1_N)),
    "corollary1": (int(COROLLARY1_M), int(COROLLARY1_N)),
    "corollary2": (23 * int(COROLLARY2_M), 23 * int(COROLLARY2_N)),
    "corollary3": (int(COROLLARY3_M), int(COROLLARY3_N)),
}

COVERING_SYSTEMS = {
    "erdos": [(0, 2), (0, 3), (1, 4), (3, 8), (7, 12), (23, 24)],
    "fib33": [(a, m) for a, m, _, _ in FIB_QUADS],
    "lucas15": [(b, n) for b, n, _, _ in LUCAS_QUADS],
    "lucas14-remark3": [(1, 3), (2, 3), (2, 4), (0, 8), (5, 8), (7, 8), (9, 16), (12, 48), (36, 48),
                        (17, 32), (15, 18), (27, 36), (3, 72), (33, 96)],
}


def builtin_covering(name: str) -> CoveringSystem:
    try:
        pairs = COVERING_SYSTEMS[name]
    except KeyError:
        raise KeyError(f"unknown covering system {name!r}; choose from {sorted(COVERING_SYSTEMS)}") from None
    return CoveringSystem.from_pairs(pairs, name)


def theorem1() -> AvoidanceCertificate:
    return AvoidanceCertificate(fib_clauses(FIB_QUADS), lucas_clauses(LUCAS_QUADS),
                                list(AUX_FIB), list(AUX_LUCAS), 1, "theorem1")


def corollary1() -> AvoidanceCertificate:
    return AvoidanceCertificate(fib_clauses(FIB_QUADS), [], list(AUX_FIB), [], 1, "corollary1")


def corollary2() -> AvoidanceCertificate:
    return AvoidanceCertificate([], lucas_clauses(LUCAS_QUADS), [], list(AUX_LUCAS), 23, "corollary2")


def corollary3() -> AvoidanceCertificate:
    return AvoidanceCertificate([], lucas_clauses(LUCAS_REMARK_QUADS), [], list(AUX_LUCAS), 1, "corollary3")


CERTIFICATES = {"theorem1": theorem1, "corollary1": corollary1, "corollary2": corollary2, "corollary3": corollary3}


def builtin_certificates() -> list[AvoidanceCertificate]:
    return [make() for make in CERTIFICATES.values()]


def builtin_certificate(name: str) -> AvoidanceCertificate:
    try:
        return CERTIFICATES[name]()
    except KeyError:
        raise KeyError(f"unknown certificate {name!r}; choose from {sorted(CERTIFICATES)}") from None
