"""Regression and distribution routines for the evaluation harness.

Implements ordinary least squares (simple and two-predictor) with the
significance machinery needed to report slope t-tests and overall F-tests.
Tail probabilities come from a continued-fraction evaluation of the
regularized incomplete beta function.
"""

from __future__ import annotations

import math
from typing import Sequence

# A finite stand-in for an unbounded test statistic on an exact fit, kept
# finite so reports stay valid JSON.
EXACT_FIT_SENTINEL = 1e30


class StatsError(Exception):
    pass


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    max_iterations = 500
    eps = 1e-15
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iterations + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise StatsError(f"incomplete beta continued fraction failed to converge (a={a}, b={b})")


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if a <= 0 or b <= 0:
        raise StatsError("betainc requires a > 0 and b > 0")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    log_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_p_two_sided(t: float, df: int) -> float:
    """Two-sided p-value for a Student-t statistic with df degrees."""
    if df < 1:
        raise StatsError("degrees of freedom must be >= 1")
    if math.isinf(t) or abs(t) >= EXACT_FIT_SENTINEL:
        return 0.0
    return betainc(df / 2.0, 0.5, df / (df + t * t))


def f_p_value(f: float, df1: int, df2: int) -> float:
    """Upper-tail probability P(F > f) for an F statistic."""
    if df1 < 1 or df2 < 1:
        raise StatsError("degrees of freedom must be >= 1")
    if f <= 0:
        return 1.0
    if math.isinf(f) or f >= EXACT_FIT_SENTINEL:
        return 0.0
    return betainc(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f))


def solve_linear(matrix: Sequence[Sequence[float]], rhs: Sequence[float]) -> list[float]:
    """Gaussian elimination with partial pivoting on a small dense system."""
    n = len(rhs)
    a = [list(map(float, row)) + [float(rhs[i])] for i, row in enumerate(matrix)]
    scale = max(abs(v) for row in a for v in row[:-1]) or 1.0
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[pivot_row][col]) < 1e-12 * scale:
            raise StatsError("matrix is rank deficient")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        for row in range(col + 1, n):
            factor = a[row][col] / a[col][col]
            for j in range(col, n + 1):
                a[row][j] -= factor * a[col][j]
    x = [0.0] * n
    for row in range(n - 1, -1, -1):
        acc = a[row][n] - sum(a[row][j] * x[j] for j in range(row + 1, n))
        x[row] = acc / a[row][row]
    return x


def ols_simple(x: Sequence[float], y: Sequence[float]) -> dict:
    """Least-squares line fit with a two-sided slope t-test (n - 2 df)."""
    n = len(x)
    if n != len(y):
        raise StatsError("x and y must have equal length")
    if n < 3:
        raise StatsError("simple regression needs n >= 3")
    x_mean = sum(x) / n
    y_mean = sum(y) / n
    sxx = sum((xi - x_mean) ** 2 for xi in x)
    if sxx <= 0:
        raise StatsError("x is constant; slope is undefined")
    sxy = sum((xi - x_mean) * (yi - y_mean) for xi, yi in zip(x, y))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    sse = sum((yi - intercept - slope * xi) ** 2 for xi, yi in zip(x, y))
    sst = sum((yi - y_mean) ** 2 for yi in y)
    r2 = 1.0 if sst == 0 else 1.0 - sse / sst
    df = n - 2
    se_slope_sq = (sse / df) / sxx
    if se_slope_sq <= 0:
        t_stat = EXACT_FIT_SENTINEL if slope != 0 else 0.0
    else:
        t_stat = slope / math.sqrt(se_slope_sq)
    return {
        "slope": slope,
        "intercept": intercept,
        "r2": r2,
        "t_stat": t_stat,
        "p_value": student_t_p_two_sided(t_stat, df),
        "n": n,
        "df": df,
    }


def ols_multiple(X: Sequence[Sequence[float]], y: Sequence[float]) -> dict:
    """Two-predictor least squares via normal equations, with the overall
    F-test on (2, n - 3) degrees of freedom.

    An exact fit caps the F statistic at a finite sentinel with p-value 0.
    """
    n = len(y)
    if n < 4:
        raise StatsError("multiple regression needs n >= 4")
    if any(len(row) != 2 for row in X):
        raise StatsError("X must have exactly two predictor columns")
    design = [[1.0, float(row[0]), float(row[1])] for row in X]
    p = 2
    normal = [[sum(design[i][a] * design[i][b] for i in range(n)) for b in range(3)] for a in range(3)]
    rhs = [sum(design[i][a] * y[i] for i in range(n)) for a in range(3)]
    coefficients = solve_linear(normal, rhs)
    fitted = [sum(c * v for c, v in zip(coefficients, row)) for row in design]
    residuals = [yi - fi for yi, fi in zip(y, fitted)]
    sse = sum(r * r for r in residuals)
    y_mean = sum(y) / n
    sst = sum((yi - y_mean) ** 2 for yi in y)
    ssr = sst - sse
    df2 = n - p - 1
    if sse <= 1e-12 * max(sst, 1.0):
        f_stat = EXACT_FIT_SENTINEL
    else:
        f_stat = (ssr / p) / (sse / df2)
    return {
        "coefficients": coefficients,
        "f_stat": f_stat,
        "p_value": f_p_value(f_stat, p, df2),
        "r2": 1.0 if sst == 0 else 1.0 - sse / sst,
        "n": n,
        "df": (p, df2),
    }
