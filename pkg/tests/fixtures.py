"""Reference values frozen from a 40-digit mpmath evaluation of the closed forms.

Regenerate with ``python3 scripts/regen_fixtures.py``.
"""

QUAD_PI3_D1 = {
    "ell": 0.79877388336460862,
    "L": 0.53774327559908859,
    "h": 0.24892528623846109,
    "s": 0.46211715726000976,
    "t": 0.12382391909638575,
}

REGULAR = {
    "d": 1.1806577213326161,
    "L": 0.41356845081927839,
    "lambda": 0.82713690163855678,
    "foot_radius": 0.53013208640173578,
}

REGULAR_K2 = {"k": 1.7927285508437944, "log_k": 0.58373878932118611, "L": 0.17042683392671644}

SCALENE = {
    "alphas": (0.80555822354800749, 0.98290632176524845, 1.3531281082765373),
    "d": 1.2284977484219692,
    "L": (0.71696223193684239, 0.45596063872920924, 0.14258295822195025),
    "lambda": (0.59854359695115949, 0.85954519015879264, 1.1729228706660516),
}

SCALENE_K2 = {"k_i": (2.0501487024547095, 1.7927285508437944, 1.6336251048320162)}
