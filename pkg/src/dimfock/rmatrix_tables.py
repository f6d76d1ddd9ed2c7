"""Reference tables for R-matrix blocks and eigenbasis transitions.

Every entry is an explicit rational expression in (q, t, u_i) and
S = (q/t)^(1/2); the build treats these tables as ground truth for the
level-1 and level-2 fixtures.  Matrix orders follow the canonical tuple
enumeration (which coincides with the source ordering of the bases).
"""

from __future__ import annotations


def transition_level1_n3(q, t, u1, u2, u3, S):
    """Unitriangular transition of the three-boson level-1 eigenvectors."""
    return [
        [
            1,
            -(q - t) * u3 / (S * t * (u2 - u3)),
            -(q - t) * u3 * (q * u3 - t * u2) / (q * t * (u1 - u3) * (u3 - u2)),
        ],
        [0, 1, -(q - t) * S * u2 / (q * (u1 - u2))],
        [0, 0, 1],
    ]


def k_constants_level1(q, t, u1, u2, S):
    return {
        ((), (1,)): -S * (q * u2 - t * u1) / (q * (u1 - u2)),
        ((1,), ()): t * S * (u1 - u2) / (q * u1 - t * u2),
    }


def k_constants_level2(q, t, u1, u2, S):
    return {
        ((), (2,)): -(q * u2 - t * u1) * (q**2 * u2 - t * u1)
        / (q * t * (u1 - u2) * (q * u2 - u1)),
        ((), (1, 1)): (q * u2 - t * u1) * (q * u2 - t**2 * u1)
        / (q * t * (u1 - u2) * (t * u1 - u2)),
        ((1,), (1,)): -(q * u2 - u1) * (t * u1 - u2) / ((q * u1 - u2) * (u1 - t * u2)),
        ((2,), ()): q * t * (u1 - u2) * (q * u1 - u2)
        / ((q * u1 - t * u2) * (q**2 * u1 - t * u2)),
        ((1, 1), ()): -q * t * (u1 - u2) * (t * u2 - u1)
        / ((q * u1 - t * u2) * (q * u1 - t**2 * u2)),
    }


def boson_block_level1_12(q, t, u1, u2, u3, S):
    d = q * u1 - t * u2
    return [
        [1, 0, 0],
        [0, S * t * (u1 - u2) / d, (q - t) * u1 / d],
        [0, (q - t) * u2 / d, S * t * (u1 - u2) / d],
    ]


def boson_block_level1_23(q, t, u1, u2, u3, S):
    d = q * u2 - t * u3
    return [
        [S * t * (u2 - u3) / d, (q - t) * u2 / d, 0],
        [(q - t) * u3 / d, S * t * (u2 - u3) / d, 0],
        [0, 0, 1],
    ]


def boson_block_level1_13(q, t, u1, u2, u3, S):
    d = q * u1 - t * u3
    return [
        [S * t * (u1 - u3) / d, 0, (q - t) * u1 / d],
        [0, 1, 0],
        [(q - t) * u3 / d, 0, S * t * (u1 - u3) / d],
    ]


def eigen_block_level1_12(q, t, u1, u2, u3, S):
    """Transpose representation matrix in the level-1 eigenbasis (N=3)."""
    x = (
        u3
        * (q - t)
        * (
            q**2 * u2 * u3
            - t**2 * u2**2 * S
            + t**2 * u2 * u3 * S
            + q * t * u2**2
            + q * t * u1 * u2 * S
            - 2 * q * t * u1 * u2
            - q * t * u1 * u3 * S
            + q * t * u1 * u3
            - 2 * q * t * u2 * u3
            + t**2 * u1 * u2
        )
        / (q * t**2 * (u1 - u2) * (u1 - u3) * (u2 - u3) * S)
    )
    return [
        [1, 0, 0],
        [
            u3
            * (q - t)
            * (-t * u1 * S + q * u3 * S + q * u1 - q * u3)
            / (q * t * (u1 - u3) * (u2 - u3) * S),
            -S * (q * u2 - t * u1) / (q * (u1 - u2)),
            u1 * (q - t) / (q * u1 - t * u2),
        ],
        [
            x,
            -u2 * (q - t) * (q * u2 - t * u1) / (q * t * (u1 - u2) ** 2),
            S
            * (
                q**2 * u1 * u2
                + q * t * u1**2
                + q * t * u2**2
                - 4 * q * t * u1 * u2
                + t**2 * u1 * u2
            )
            / (q * (u1 - u2) * (q * u1 - t * u2)),
        ],
    ]


def eigen_block_level1_n2(q, t, u1, u2, S):
    """Two-boson level-1 block in the eigenbasis (lower-right corner)."""
    return [
        [
            -S * (q * u2 - t * u1) / (q * (u1 - u2)),
            (q - t) * u1 / (q * u1 - t * u2),
        ],
        [
            -(q - t) * u2 * (q * u2 - t * u1) / (q * t * (u1 - u2) ** 2),
            S
            * (
                u1 * u2 * q**2
                + t * u1**2 * q
                + t * u2**2 * q
                - 4 * t * u1 * u2 * q
                + t**2 * u1 * u2
            )
            / (q * (u1 - u2) * (q * u1 - t * u2)),
        ],
    ]


def transition_level2_n3(q, t, u1, u2, u3, S):
    """Level-2 transition over products of Macdonald functions, three bosons."""
    a37 = (
        u3
        * (q - t)
        * (
            q**2 * u2 * ((t + 1) * u2 * u3 - u1 * (u2 + u3))
            + q
            * (
                t**2 * (-u1) * u2 * u3
                + t
                * (
                    u1 * (2 * u2**2 + 2 * u3 * u2 + u3**2)
                    - u2 * (u2**2 + 2 * u3 * u2 + 2 * u3**2)
                )
                + u2**2 * u3
            )
            + t * u2 * u3 * (t * (u2 + u3) - (t + 1) * u1)
        )
        / (q * t * (u1 - u2) * (u1 - u3) * (q * u2 - u3) * (t * u3 - u2))
    )
    a38 = (
        -((q - t) ** 2)
        * u2
        * u3
        * (
            u2 * u3 * t**2
            - q * u2**2 * t
            - q * u3**2 * t
            + q * u1 * u2 * t
            - u1 * u2 * t
            + q * u1 * u3 * t
            - u1 * u3 * t
            - q * u2 * u3 * t
            + u2 * u3 * t
            + q * u2 * u3
        )
        / (q * S * t**2 * (u1 - u2) * (u1 - u3) * (q * u2 - u3) * (u2 - t * u3))
    )
    a39 = (
        -(q - 1)
        * (q - t) ** 2
        * (t + 1)
        * u2
        * u3
        * (
            u2 * u3 * q**2
            - u2**2 * q
            - u3**2 * q
            - t * u1 * u2 * q
            + u1 * u2 * q
            - t * u1 * u3 * q
            + u1 * u3 * q
            + t * u2 * u3 * q
            - u2 * u3 * q
            + t * u2 * u3
        )
        / (q * S * t * (q * t - 1) * (u1 - u2) * (u1 - u3) * (q * u2 - u3) * (u2 - t * u3))
    )
    row1 = [
        1,
        0,
        -q * (q + 1) * (q - t) * (t - 1) * u3 / (S * t * (q * t - 1) * (u2 - q * u3)),
        (q + 1)
        * (t - 1)
        * (t - q)
        * u3
        * (t * u2 - q**2 * u3)
        / (t * (q * t - 1) * (q * u3 - u1) * (q * u3 - u2)),
        -(q - t)
        * u3
        * (
            t * u3 * q**3
            - t * u2 * q**2
            + t * u3 * q**2
            - u3 * q**2
            - t**2 * u3 * q
            + t * u2
        )
        / (q * t * (q * t - 1) * (u2 - u3) * (q * u3 - u2)),
        -(q - 1)
        * (q + 1)
        * (q - t)
        * (t - 1)
        * (t + 1)
        * u3
        / ((q * t - 1) ** 2 * (q * u3 - u2)),
        -(q + 1)
        * (q - t) ** 2
        * (t - 1)
        * u3**2
        * (q**2 * u3 - t * u2)
        / (S * t**2 * (q * t - 1) * (u2 - u3) * (u1 - q * u3) * (u2 - q * u3)),
        -(q - t)
        * u3
        * (q * u3 - t * u2)
        * (q**2 * u3 - t * u2)
        * (
            t * u3 * q**3
            - t * u1 * q**2
            + t * u3 * q**2
            - u3 * q**2
            - t**2 * u3 * q
            + t * u1
        )
        / (
            q**2
            * t**2
            * (q * t - 1)
            * (u1 - u3)
            * (u3 - u2)
            * (q * u3 - u1)
            * (q * u3 - u2)
        ),
        (q - 1)
        * (q + 1)
        * (q - t)
        * (t - 1)
        * (t + 1)
        * u3
        * (q * u3 - t * u2)
        * (q**2 * u3 - t * u2)
        / (q * t * (q * t - 1) ** 2 * (u2 - u3) * (q * u3 - u1) * (q * u3 - u2)),
    ]
    row2 = [
        0,
        1,
        -(q - t) * u3 / (S * t * (t * u2 - u3)),
        (q - t)
        * u3
        * (q * u3 - t**2 * u2)
        / (q * t * (t * u1 - u3) * (t * u2 - u3)),
        (q - t) * u3 / (q * (t * u2 - u3)),
        (q - t)
        * u3
        * (
            -q * u2 * t**3
            + u3 * t**2
            + q * u2 * t
            + q**2 * u3 * t
            - q * u3 * t
            - q * u3
        )
        / (q * t * (q * t - 1) * (u2 - u3) * (t * u2 - u3)),
        -((q - t) ** 2)
        * S
        * u3**2
        * (q * u3 - t**2 * u2)
        / (q**2 * t * (t * u1 - u3) * (u2 - u3) * (t * u2 - u3)),
        -(q - t)
        * u3
        * (q * u3 - t * u2)
        * (q * u3 - t**2 * u2)
        / (q**2 * t * (t * u1 - u3) * (t * u2 - u3) * (u3 - u2)),
        -(q - t)
        * u3
        * (q * u3 - t * u2)
        * (q * u3 - t**2 * u2)
        * (
            -q * u1 * t**3
            + u3 * t**2
            + q * u1 * t
            + q**2 * u3 * t
            - q * u3 * t
            - q * u3
        )
        / (
            q**2
            * t**2
            * (q * t - 1)
            * (u1 - u3)
            * (t * u1 - u3)
            * (t * u2 - u3)
            * (u3 - u2)
        ),
    ]
    row3 = [
        0,
        0,
        1,
        -(q - t) * S * u2 / (q * (u1 - u2)),
        -(q - t) * u3 / (S * t * (q * u2 - u3)),
        -(q - 1) * (q - t) * (t + 1) * u3 / (S * (q * t - 1) * (u2 - t * u3)),
        a37,
        a38,
        a39,
    ]
    row4 = [
        0,
        0,
        0,
        1,
        0,
        0,
        -(q - t) * u3 / (S * t * (u2 - u3)),
        -(q - t) * u3 * (q * u3 - t * u2) / (q * t * (q * u1 - u3) * (u3 - u2)),
        -(q - 1)
        * (q - t)
        * (t + 1)
        * u3
        * (q * u3 - t * u2)
        / (q * (q * t - 1) * (u2 - u3) * (t * u3 - u1)),
    ]
    row5 = [
        0,
        0,
        0,
        0,
        1,
        0,
        -q * (q + 1) * (q - t) * (t - 1) * u2 / (S * t * (q * t - 1) * (u1 - q * u2)),
        -(q - t)
        * u2
        * (
            t * u2 * q**3
            - t * u1 * q**2
            + t * u2 * q**2
            - u2 * q**2
            - t**2 * u2 * q
            + t * u1
        )
        / (q * t * (q * t - 1) * (u1 - u2) * (q * u2 - u1)),
        -(q - 1)
        * (q + 1)
        * (q - t)
        * (t - 1)
        * (t + 1)
        * u2
        / ((q * t - 1) ** 2 * (q * u2 - u1)),
    ]
    row6 = [
        0,
        0,
        0,
        0,
        0,
        1,
        -(q - t) * u2 / (S * t * (t * u1 - u2)),
        (q - t) * u2 / (q * (t * u1 - u2)),
        (q - t)
        * u2
        * (
            -q * u1 * t**3
            + u2 * t**2
            + q * u1 * t
            + q**2 * u2 * t
            - q * u2 * t
            - q * u2
        )
        / (q * t * (q * t - 1) * (u1 - u2) * (t * u1 - u2)),
    ]
    row7 = [
        0,
        0,
        0,
        0,
        0,
        0,
        1,
        -(q - t) * S * u2 / (q * (q * u1 - u2)),
        -(q - 1) * (q - t) * S * t * (t + 1) * u2 / (q * (q * t - 1) * (u1 - t * u2)),
    ]
    row8 = [0, 0, 0, 0, 0, 0, 0, 1, 0]
    row9 = [0, 0, 0, 0, 0, 0, 0, 0, 1]
    return [row1, row2, row3, row4, row5, row6, row7, row8, row9]


def eigen_block_level2_n2(q, t, Q, S):
    """Level-2 two-boson representation matrix in the eigenbasis."""
    v33 = (
        Q * q**4
        + Q * t * q**4
        + Q**2 * t**3 * q**3
        + Q**3 * t**2 * q**3
        - 4 * Q * t**2 * q**3
        + Q * q**3
        - Q**3 * t * q**3
        - 4 * Q**2 * t * q**3
        - 3 * Q * t * q**3
        + t * q**3
        - 4 * Q**3 * t**3 * q**2
        + Q * t**3 * q**2
        + 3 * Q**3 * t**2 * q**2
        + 12 * Q**2 * t**2 * q**2
        + 3 * Q * t**2 * q**2
        + Q**3 * t * q**2
        - 4 * Q * t * q**2
        + Q**3 * t**4 * q
        + Q**4 * t**3 * q
        - 3 * Q**3 * t**3 * q
        - 4 * Q**2 * t**3 * q
        - Q * t**3 * q
        - 4 * Q**3 * t**2 * q
        + Q * t**2 * q
        + Q**2 * t * q
        + Q**3 * t**4
        + Q**3 * t**3
    ) / (q * (q - Q) * (q * Q - 1) * t * (t - Q) * (Q * t - 1))
    v43 = (
        (q - t)
        * S
        * (
            -Q * q**3
            + Q**3 * t * q**3
            + Q**2 * t * q**3
            - Q * t * q**3
            - Q**3 * t**2 * q**2
            - 2 * Q**2 * t**2 * q**2
            + 2 * Q * t**2 * q**2
            - Q**3 * t * q**2
            + 3 * Q * t * q**2
            - t * q**2
            + 2 * Q**3 * t**2 * q
            - 2 * Q**2 * t**2 * q
            - Q * t**2 * q
            - Q**2 * t * q
            + 2 * Q * t * q
            + Q**2 * t**3
            - Q * t**2
        )
        / (q**2 * (Q - 1) * (q * Q - 1) ** 2 * (Q - t) * t)
    )
    v53 = (
        -(q - 1)
        * (t + 1)
        * (q - t)
        * S
        * (
            q**3 * Q
            + q**2
            * (
                Q**3 * (t - 1)
                + Q**2 * (t**2 - 1)
                + Q * (-2 * t**2 - 3 * t + 1)
                + t
            )
            + q * Q * t * (Q**2 * (1 - 2 * t) + 2 * Q * (t + 1) + t**2 + t - 2)
            - Q**2 * t**3
        )
        / (q**2 * (Q - 1) * (q * Q - 1) * (q * t - 1) * (Q - t) ** 2)
    )
    v44 = (
        q**7 * Q**3 * t
        - q**6 * Q**2 * (2 * Q * t**2 - Q * t + t + 1)
        + q**5
        * Q
        * t
        * (
            Q**3 * t**2
            - Q**2 * (t**2 + t + 2)
            + Q * (t**2 - 3 * t + 5)
            + 2 * t
            - 1
        )
        - q**4
        * Q
        * t
        * (
            Q**3 * t
            + Q**2 * (3 * t**2 - 7 * t + 2)
            + Q * (-13 * t**2 + 11 * t - 5)
        )
        - q**4 * Q * t * (6 * t**2 - 4 * t + 1)
        + q**3
        * t**2
        * (
            Q**3 * (t**2 - 4 * t + 6)
            + Q**2 * (-5 * t**2 + 11 * t - 13)
            + Q * (2 * t**2 - 7 * t + 3)
            + t
        )
        + q * Q * t**3 * (Q * t**2 + (Q - 1) * t + 2)
        - Q * t**4
        + q**2
        * t**2
        * (
            Q**3 * (t - 2) * t
            + Q**2 * (-5 * t**2 + 3 * t - 1)
            + Q * (2 * t**2 + t + 1)
            - 1
        )
    ) / (q * (Q - 1) * t * (q * Q - 1) * (q * t - 1) * (q * Q - t) * (q**2 * Q - t))
    v34 = (
        -q
        * (q + 1)
        * Q
        * (q - t)
        * (t - 1)
        * (
            -Q * q**3
            + Q**2 * t * q**3
            - 2 * Q**2 * t**2 * q**2
            + Q * t**2 * q**2
            + Q**2 * t * q**2
            + 2 * Q * t * q**2
            - 2 * t * q**2
            + Q**3 * t**2 * q
            - 3 * Q**2 * t**2 * q
            + t**2 * q
            - 2 * Q**2 * t * q
            + 2 * Q * t * q
            + t * q
            + Q**2 * t**3
            + Q**2 * t**2
            - Q * t**2
            - t**2
        )
        / ((q - Q) * (q * Q - t) * (q**2 * Q - t) * S * t * (q * t - 1) * (Q * t - 1))
    )
    v35 = (
        Q
        * (q - t)
        * (
            Q * q**3
            - Q**2 * q**2
            + 2 * Q**2 * t**2 * q**2
            - 2 * Q * t**2 * q**2
            - t**2 * q**2
            - Q**2 * t * q**2
            - 2 * Q * t * q**2
            + 2 * t * q**2
            - Q**2 * t**3 * q
            + Q * t**3 * q
            + t**3 * q
            - Q**3 * t**2 * q
            + 3 * Q**2 * t**2 * q
            - t**2 * q
            + 2 * Q**2 * t * q
            - Q * t * q
            - Q**2 * t**3
        )
        / ((q - Q) * (q * Q - t) * S * t * (Q * t - 1) * (q * Q - t**2))
    )
    v55 = (
        q**5 * Q**2 * t
        + q**4
        * Q
        * (
            Q**2 * (2 * t**3 + 2 * t**2 - t - 1)
            + Q * (-5 * t**3 - 5 * t**2 + t)
            + t**2 * (t + 1)
        )
        + q**3
        * t
        * (
            Q**4 * t**2
            + Q**3 * (-6 * t**3 - 7 * t**2 + t + 2)
            + Q**2 * t * (t**3 + 13 * t**2 + 11 * t + 3)
            - Q * t * (t**3 + 3 * t**2 + 4 * t + 2)
            + t**4
        )
        - q**2
        * t**2
        * (
            Q**4
            - Q**3 * (2 * t**3 + 4 * t**2 + 3 * t + 1)
            + Q**2 * (3 * t**3 + 11 * t**2 + 13 * t + 1)
            + Q * t * (2 * t**3 + t**2 - 7 * t - 6)
            + t**2
        )
        - q * Q * t**4 * (Q**2 * (t + 1) + Q * (t**2 - 5 * t - 5) - t**3 - t**2 + 2 * t + 2)
        - Q**2 * t**6
    ) / (q * (Q - 1) * t * (q * t - 1) * (Q - t) * (q * Q - t) * (q * Q - t**2))
    row1 = [
        -(q - Q * t) * (q**2 - Q * t) / (q * (q - Q) * (Q - 1) * t),
        0,
        Q * (q - t) * S * (Q * t - 1) / (q * (q * Q - 1) * (Q - t)),
        Q
        * (q - t)
        * (
            Q * t * q**3
            - Q * q**2
            + Q * t * q**2
            - t * q**2
            - Q * t**2 * q
            + t
        )
        / ((q * Q - t) * (q**2 * Q - t) * (q * t - 1)),
        -(Q - 1) * Q * (q - t) * t / ((q * Q - t) * (q * Q - t**2)),
    ]
    row2 = [
        0,
        (q - Q * t) * (q - Q * t**2) / (q * (Q - 1) * t * (Q * t - 1)),
        -(q - 1)
        * (q - Q)
        * Q
        * (q - t)
        * S
        * t
        * (t + 1)
        / (q * (q * Q - 1) * (Q - t) * (q * t - 1)),
        -(q - 1)
        * q
        * (q + 1)
        * (Q - 1)
        * Q
        * (q - t)
        * (t - 1)
        * t
        * (t + 1)
        / ((q * Q - t) * (q**2 * Q - t) * (q * t - 1) ** 2),
        Q
        * (q - t)
        * (-q * t**3 + Q * t**2 + q * t + q**2 * Q * t - q * Q * t - q * Q)
        / ((q * Q - t) * (q * t - 1) * (q * Q - t**2)),
    ]
    row3 = [
        (q + 1)
        * (q - t)
        * (t - 1)
        * (q - Q * t)
        * (q**2 - Q * t)
        / ((q - Q) ** 2 * (Q - 1) * S * t**2 * (q * t - 1)),
        (q - t) * (q - Q * t) * (q - Q * t**2) / (q * (Q - 1) * S * t**2 * (Q * t - 1) ** 2),
        v33,
        v34,
        v35,
    ]
    row4 = [
        -(q - t)
        * (q - Q * t)
        * (q**2 - Q * t)
        * (Q * t * q**3 - q**2 - t**2 * q - Q * t * q + t * q + t)
        / (q**2 * (q - Q) * (Q - 1) ** 2 * (q * Q - 1) * t**2 * (q * t - 1)),
        -(q - t) * (q - Q * t) * (q - Q * t**2) / (q * (Q - 1) * (q * Q - 1) * t**2 * (Q * t - 1)),
        v43,
        v44,
        -Q
        * (q - t) ** 2
        * (Q * q**2 + Q * t * q**2 - t**2 * q - Q * t * q + t * q - t**2)
        / (q * (q * Q - 1) * (q * Q - t) * t * (q * Q - t**2)),
    ]
    row5 = [
        -(q - 1)
        * (q + 1)
        * (q - t)
        * (t - 1)
        * (t + 1)
        * (q - Q * t)
        * (q**2 - Q * t)
        / (q * (q - Q) * (Q - 1) * t * (t - Q) * (q * t - 1) ** 2),
        -(q - t)
        * (q - Q * t)
        * (q - Q * t**2)
        * (-q * t**3 - q * t**2 + q * Q * t**2 + t**2 + q**2 * t - q * Q)
        / (q**2 * (Q - 1) ** 2 * t**2 * (t - Q) * (q * t - 1) * (Q * t - 1)),
        v53,
        -(q - 1)
        * (q + 1)
        * Q
        * (q - t) ** 2
        * (t - 1)
        * (t + 1)
        * (Q * q**2 + Q * q - Q * t * q + t * q - t**2 - t)
        / ((Q - t) * (q * Q - t) * (q**2 * Q - t) * (q * t - 1) ** 2),
        v55,
    ]
    return [row1, row2, row3, row4, row5]


def boson_block_level2_n2(q, t, Q, S):
    """Level-2 two-boson representation matrix in the boson monomial basis."""
    d = 2 * (q * Q - t) * (q**2 * Q - t) * (q * Q - t**2)
    r11 = (
        -q
        * (Q - 1)
        * t
        * (
            -2 * Q**2 * q**2
            - Q * q**2
            + Q * t * q**2
            + Q * t**2 * q
            + Q * q
            + 2 * Q * t * q
            - Q * t**2
            - 2 * t**2
            + Q * t
        )
        / d
    )
    r41 = (
        (q - t)
        * (
            Q**2 * q**3
            + Q * q**3
            + Q**2 * t * q**3
            - Q * t * q**3
            + Q**2 * q**2
            - 2 * Q * t**2 * q**2
            - Q * q**2
            + Q**2 * t * q**2
            - Q * t * q**2
            - 2 * Q * t**2 * q
            + 2 * t**2 * q
            - 2 * Q * t * q
            + 2 * t**3
        )
        / d
    )
    r22 = (
        -q
        * (Q - 1)
        * t
        * (
            -2 * Q**2 * q**2
            + Q * q**2
            + Q * t * q**2
            + Q * t**2 * q
            + Q * q
            - 2 * Q * t * q
            + Q * t**2
            - 2 * t**2
            + Q * t
        )
        / d
    )
    r52 = (
        -(q - t)
        * (
            -(Q**2) * q**3
            - Q * q**3
            + Q**2 * t * q**3
            - Q * t * q**3
            + Q**2 * q**2
            + 2 * Q * t**2 * q**2
            - Q * q**2
            - Q**2 * t * q**2
            + Q * t * q**2
            - 2 * Q * t**2 * q
            + 2 * t**2 * q
            + 2 * Q * t * q
            - 2 * t**3
        )
        / d
    )
    r33 = (
        (
            Q**2 * q**4
            - Q**2 * t**2 * q**3
            + Q**3 * t * q**3
            - 3 * Q**2 * t * q**3
            + Q * t * q**3
            + Q * t**3 * q**2
            + 2 * Q**2 * t**2 * q**2
            - 2 * Q * t**2 * q**2
            - Q**2 * t * q**2
            - Q**2 * t**3 * q
            + 3 * Q * t**3 * q
            - t**3 * q
            + Q * t**2 * q
            - Q * t**4
        )
        * 2
        / d
    )
    r14 = (
        Q
        * (q - t)
        * (
            2 * Q**2 * q**3
            - 2 * Q * t**2 * q**2
            + 2 * Q**2 * t * q**2
            - 2 * Q * t * q**2
            - Q * t**3 * q
            + t**3 * q
            - Q * t**2 * q
            + t**2 * q
            - 2 * Q * t * q
            + Q * t**3
            + t**3
            - Q * t**2
            + t**2
        )
        / d
    )
    r44 = r11
    r25 = (
        Q
        * (q - t)
        * (
            2 * Q**2 * q**3
            - 2 * Q * t**2 * q**2
            - 2 * Q**2 * t * q**2
            + 2 * Q * t * q**2
            + Q * t**3 * q
            - t**3 * q
            - Q * t**2 * q
            + t**2 * q
            - 2 * Q * t * q
            + Q * t**3
            + t**3
            + Q * t**2
            - t**2
        )
        / d
    )
    r55 = r22
    return [
        [
            r11,
            -(q - 1) * q * (Q - 1) * Q * (q - t) * t * (t + 1) / d,
            (q - 1) * (Q - 1) * Q * (q - t) * S * t**2 * (t + 1) / d,
            r14,
            -(q - 1) * (Q - 1) * Q * (q - t) * t**2 * (t + 1) / d,
        ],
        [
            -q * (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) * t / d,
            r22,
            (Q - 1)
            * Q
            * (q - t)
            * S
            * t
            * (2 * Q * q**2 - t**2 * q + t * q - t**2 - t)
            / d,
            (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) * t**2 / d,
            r25,
        ],
        [
            q**2 * (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) * 2 / (d * S),
            q
            * (Q - 1)
            * (q - t)
            * (Q * q**2 + Q * t * q**2 + Q * q - Q * t * q - 2 * t**2)
            * 2
            / (d * S),
            r33,
            -q * (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) * t * 2 / (d * S),
            q
            * (Q - 1)
            * Q
            * (q - t)
            * (2 * Q * q**2 - t**2 * q + t * q - t**2 - t)
            * 2
            / (d * S),
        ],
        [
            r41,
            (q - 1) * q**2 * (Q - 1) * Q * (q - t) * (t + 1) / d,
            -(q - 1) * q * (Q - 1) * Q * (q - t) * S * t * (t + 1) / d,
            r44,
            (q - 1) * q * (Q - 1) * Q * (q - t) * t * (t + 1) / d,
        ],
        [
            -(q**2) * (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) / d,
            r52,
            (Q - 1)
            * (q - t)
            * S
            * t
            * (Q * q**2 + Q * t * q**2 + Q * q - Q * t * q - 2 * t**2)
            / d,
            q * (q + 1) * (Q - 1) * Q * (q - t) * (t - 1) * t / d,
            r55,
        ],
    ]
