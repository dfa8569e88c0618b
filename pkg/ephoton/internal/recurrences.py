#   ephoton -- Photon-electron entanglement in a highly excited radiation mode
#   Copyright (C) 2019  The ephoton developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

import numpy as np

# Once the magnitude of the current iterate exceeds this value, both stored
# iterates are divided by it and the logarithm is accumulated separately
RESCALE_THRESHOLD = 1e150

# Orders above which the recurrence is accumulated in extended precision
EXTENDED_PRECISION_ORDER = 10000


def working_dtype(n_max, is_complex):
    """
    Returns the floating point type a recurrence up to order n_max should be
    accumulated in.
    """
    if n_max > EXTENDED_PRECISION_ORDER:
        return np.clongdouble if is_complex else np.longdouble
    return np.complex128 if is_complex else np.float64


def three_term(n, p0, p1, step):
    """
    Evaluates the three-term recurrence

        p[j + 1] = (a(j) + d(j)) * p[j] - c(j) * p[j - 1]

    up to order n, where `step(j)` returns the coefficients (a(j), c(j)) or
    (a(j), c(j), d(j)). A small d(j) is applied as a separate term and never
    rounded into a(j).

    All arguments are broadcast against each other; n may be an array, in
    which case each element of the result is taken at its own order.

    Returns a tuple (mantissa, log_scale) such that the polynomial value is
    mantissa * exp(log_scale). The mantissa never exceeds RESCALE_THRESHOLD in
    magnitude.
    """
    n = np.asarray(n, dtype=np.int64)
    if np.any(n < 0):
        raise ValueError("Recurrence order must be non-negative")

    shape = np.broadcast(n, p0, p1).shape
    n = np.broadcast_to(n, shape)
    prev = np.array(np.broadcast_to(p0, shape))
    cur = np.array(np.broadcast_to(p1, shape))
    log_scale = np.zeros(shape)

    out = np.where(n == 0, prev, cur)
    out_log = np.zeros(shape)

    n_max = int(np.max(n)) if n.size > 0 else 0
    for j in range(1, n_max):
        coeffs = step(j)
        nxt = coeffs[0] * cur - coeffs[1] * prev
        if len(coeffs) > 2:
            nxt = nxt + coeffs[2] * cur
        prev, cur = cur, nxt

        # Keep the iterates representable
        mag = np.abs(cur)
        big = mag > RESCALE_THRESHOLD
        if np.any(big):
            scale = np.where(big, mag, 1.0)
            prev = prev / scale
            cur = cur / scale
            log_scale = log_scale + np.log(scale).astype(np.float64)

        # Capture the elements that reached their target order
        hit = n == (j + 1)
        if np.any(hit):
            out = np.where(hit, cur, out)
            out_log = np.where(hit, log_scale, out_log)

    return out, out_log
