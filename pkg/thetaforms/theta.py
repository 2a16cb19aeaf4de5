# Copyright (C) 2021 The thetaforms developers
#
# This file is part of thetaforms.
#
# thetaforms is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# thetaforms is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with thetaforms.  If not, see <https://www.gnu.org/licenses/>.

"""Builders for the classical theta functions and their relatives.

Every named series is available in two independent constructions: as a
bilateral sum (:py:func:`series_sum`, :py:func:`theta_f`) and as an
infinite product (:py:func:`classical`, :py:func:`jacobi_triple_product`,
:py:func:`eta_quotient`). The identity catalog checks them against each
other.

All builders take an explicit truncation order N and return a
:py:class:`QSeries <thetaforms.series.QSeries>` truncated at q^N. Series
in q^k are built in q up to ceil(N / k) and dilated afterwards.
"""

import enum
import numbers
from math import isqrt

import numpy as np

from ._exceptions import InputError
from .divisors import kronecker
from .lattice import binary_lattice_sum
from .series import (QSeries, _divide_exact, _from_exact, _multiply_factors, dilate, mul, pochhammer,
					 power, scale, shift)
from .utils import _check_truncation, integer_interval



class ThetaKind(enum.Enum):
	"""The named series with a sum and a product construction.

	"""

	E = 'E'
	PHI = 'PHI'
	PHI_NEG = 'PHI_NEG'
	PSI = 'PSI'
	PSI_NEG = 'PSI_NEG'
	F12 = 'F12'
	F15 = 'F15'
	A_FN = 'A_FN'
	C_FN = 'C_FN'



def _check_dilation(obj, k):
	if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 1:
		raise InputError(obj, 'k', 'The dilation factor has to be a positive integer.')



def _base_order(N, k):
	"""Truncation order in q needed for a series in q^k known up to q^N."""

	return -(-N // k)



def euler_E(k, N):
	"""Computes E(q^k) = (q^k; q^k) with the pentagonal number theorem.

	Parameters
	----------
	k : int
		The dilation factor, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		E(q^k) truncated at q^N, i.e. the sum of (-1)^n q^(k n (3n+1)/2)
		over all integers n.
	"""

	_check_dilation('thetaforms.theta.euler_E', k)
	_check_truncation('thetaforms.theta.euler_E', N)

	M = _base_order(N, k)
	array = np.zeros(M + 1, dtype=np.int64)
	lo, hi = integer_interval(3, 1, -2*M)
	for n in range(lo, hi + 1):
		array[n*(3*n + 1)//2] += -1 if n % 2 else 1

	return dilate(QSeries(array, M), k, N)



def theta_f(sign_a, r, sign_b, s, N):
	r"""Computes Ramanujan's theta function f(a, b) for monomial arguments.

	Here a = sign_a q^r and b = sign_b q^s, and

	.. math:: f(a, b) = \sum_{n \in \mathbb{Z}} a^{n(n+1)/2} b^{n(n-1)/2}.

	Parameters
	----------
	sign_a : int
		Sign of a, either 1 or -1.
	r : int
		Exponent of a, non-negative.
	sign_b : int
		Sign of b, either 1 or -1.
	s : int
		Exponent of b, non-negative.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		f(a, b) truncated at q^N.

	Raises
	------
	InputError
		If r + s < 1, since the series does not converge then.

	Examples
	--------
	``theta_f(1, 1, 1, 1, N)`` is phi(q), ``theta_f(1, 1, 1, 3, N)`` is
	psi(q) and ``theta_f(-1, 1, -1, 2, N)`` is E(q).
	"""

	_check_signs('thetaforms.theta.theta_f', sign_a, sign_b)
	_check_truncation('thetaforms.theta.theta_f', N)
	if r < 0 or s < 0 or r + s < 1:
		raise InputError('thetaforms.theta.theta_f', 'r', 'The exponents have to be non-negative with r + s >= 1.')

	array = np.zeros(N + 1, dtype=np.int64)
	interval = integer_interval(r + s, r - s, -2*N)
	if interval is not None:
		n = np.arange(interval[0], interval[1] + 1, dtype=np.int64)
		exponents = ((r + s)*n*n + (r - s)*n) // 2
		signs = np.ones(len(n), dtype=np.int64)
		if sign_a == -1:
			signs *= np.where((n*(n + 1)//2) % 2 == 1, -1, 1)
		if sign_b == -1:
			signs *= np.where((n*(n - 1)//2) % 2 == 1, -1, 1)
		np.add.at(array, exponents, signs)

	return QSeries(array, N)



def _check_signs(obj, sign_a, sign_b):
	if sign_a not in (1, -1):
		raise InputError(obj, 'sign_a', 'The sign has to be 1 or -1.')
	if sign_b not in (1, -1):
		raise InputError(obj, 'sign_b', 'The sign has to be 1 or -1.')



def _geometric_factors(c0, e, sign, step, N):
	"""Factors (1 - c0 sign^n q^(e + n step)) of (c0 q^e; sign q^step)."""

	factors = []
	c = c0
	while e <= N:
		factors.append((c, e))
		e += step
		c *= sign

	return factors



def jacobi_triple_product(sign_a, r, sign_b, s, N):
	"""Computes f(a, b) as the product (-a; ab)(-b; ab)(ab; ab).

	The arguments have the same meaning as in :py:func:`theta_f`. The base
	ab = sign_a sign_b q^(r+s) may carry a negative sign.

	Parameters
	----------
	sign_a : int
		Sign of a, either 1 or -1.
	r : int
		Exponent of a, non-negative.
	sign_b : int
		Sign of b, either 1 or -1.
	s : int
		Exponent of b, non-negative.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The product truncated at q^N. It vanishes identically if one of
		its factors is the constant 0.
	"""

	_check_signs('thetaforms.theta.jacobi_triple_product', sign_a, sign_b)
	_check_truncation('thetaforms.theta.jacobi_triple_product', N)
	if r < 0 or s < 0 or r + s < 1:
		raise InputError('thetaforms.theta.jacobi_triple_product', 'r', 'The exponents have to be non-negative with r + s >= 1.')

	t = r + s
	sign = sign_a * sign_b
	factors = _geometric_factors(sign, t, sign, t, N)
	factors += _geometric_factors(-sign_a, r, sign, t, N)
	factors += _geometric_factors(-sign_b, s, sign, t, N)

	if (1, 0) in factors:
		return QSeries.zero(N)

	array = np.zeros(N + 1, dtype=np.int64)
	array[0] = 1

	return QSeries(_multiply_factors(array, factors, 'jacobi_triple_product'), N)



def eta_quotient(numerator, denominator, N):
	"""Computes a quotient of products of Euler functions.

	Parameters
	----------
	numerator : dict[int, int]
		Map k -> m for the factor E(q^k)^m in the numerator.
	denominator : dict[int, int]
		Map k -> m for the factor E(q^k)^m in the denominator.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The quotient truncated at q^N.

	Notes
	-----
	The denominator factors are divided out one at a time with Python
	integers. Intermediate quotients such as E(q^2)/E(q) may have
	coefficients far beyond 64 bits, only the final quotient is range
	checked.
	"""

	_check_truncation('thetaforms.theta.eta_quotient', N)
	for factors, name in ((numerator, 'numerator'), (denominator, 'denominator')):
		for k, m in factors.items():
			_check_dilation('thetaforms.theta.eta_quotient', k)
			if isinstance(m, bool) or not isinstance(m, numbers.Integral) or m < 0:
				raise InputError('thetaforms.theta.eta_quotient', name, 'The multiplicities have to be non-negative integers.')

	result = QSeries.one(N)
	for k, m in sorted(numerator.items()):
		result = mul(result, power(euler_E(k, N), m))

	values = result.to_list()
	for k, m in sorted(denominator.items()):
		divisor = euler_E(k, N).coeffs
		for _ in range(m):
			values = _divide_exact(values, divisor)

	return QSeries(_from_exact(np.array(values, dtype=object), 'eta_quotient'), N)



_ETA_QUOTIENTS = {
	ThetaKind.PHI : ({2 : 5}, {1 : 2, 4 : 2}),
	ThetaKind.PHI_NEG : ({1 : 2}, {2 : 1}),
	ThetaKind.PSI : ({2 : 2}, {1 : 1}),
	ThetaKind.PSI_NEG : ({1 : 1, 4 : 1}, {2 : 1}),
	ThetaKind.F12 : ({2 : 1, 3 : 2}, {6 : 1, 1 : 1}),
	ThetaKind.F15 : ({2 : 2, 3 : 1, 12 : 1}, {6 : 1, 4 : 1, 1 : 1}),
}

_SUM_SIDES = {
	ThetaKind.E : (-1, 1, -1, 2),
	ThetaKind.PHI : (1, 1, 1, 1),
	ThetaKind.PHI_NEG : (-1, 1, -1, 1),
	ThetaKind.PSI : (1, 1, 1, 3),
	ThetaKind.PSI_NEG : (-1, 1, -1, 3),
	ThetaKind.F12 : (1, 1, 1, 2),
	ThetaKind.F15 : (1, 1, 1, 5),
}



def _as_kind(kind):
	if isinstance(kind, ThetaKind):
		return kind
	try:
		return ThetaKind[str(kind).upper()]
	except KeyError:
		raise InputError('thetaforms.theta', 'kind', f'Unknown theta kind {kind}. Choose one of {", ".join(k.name for k in ThetaKind)}.')



def classical(kind, k, N):
	"""Builds a named series in q^k from its product representation.

	Parameters
	----------
	kind : ThetaKind or str
		The series.
	k : int
		The dilation factor, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The series in q^k truncated at q^N.

	Notes
	-----
	The products are

	- E: (q; q)
	- PHI: E(q^2)^5 / (E(q^4)^2 E(q)^2)
	- PHI_NEG: E(q)^2 / E(q^2)
	- PSI: E(q^2)^2 / E(q)
	- PSI_NEG: E(q) E(q^4) / E(q^2)
	- F12: E(q^3)^2 E(q^2) / (E(q^6) E(q))
	- F15: E(q^12) E(q^3) E(q^2)^2 / (E(q^6) E(q^4) E(q))
	- A_FN: phi(q) phi(q^3) + 4 q psi(q^2) psi(q^6)
	- C_FN: 3 E(q^3)^3 / E(q)
	"""

	kind = _as_kind(kind)
	_check_dilation('thetaforms.theta.classical', k)
	_check_truncation('thetaforms.theta.classical', N)

	M = _base_order(N, k)
	if kind == ThetaKind.E:
		base = pochhammer(1, 1, 1, M)
	elif kind in _ETA_QUOTIENTS:
		numerator, denominator = _ETA_QUOTIENTS[kind]
		base = eta_quotient(numerator, denominator, M)
	elif kind == ThetaKind.A_FN:
		first = mul(classical(ThetaKind.PHI, 1, M), classical(ThetaKind.PHI, 3, M))
		second = mul(classical(ThetaKind.PSI, 2, M), classical(ThetaKind.PSI, 6, M))
		base = first + scale(4, shift(second, 1))
	else:
		base = scale(3, eta_quotient({3 : 3}, {1 : 1}, M))

	return dilate(base, k, N)



def series_sum(kind, k, N):
	"""Builds a named series in q^k from its sum representation.

	The theta functions come from :py:func:`theta_f`, a(q) and c(q) from
	the two dimensional lattice sums :py:func:`borwein_a` and
	:py:func:`borwein_c`.

	Parameters
	----------
	kind : ThetaKind or str
		The series.
	k : int
		The dilation factor, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The series in q^k truncated at q^N.
	"""

	kind = _as_kind(kind)
	_check_dilation('thetaforms.theta.series_sum', k)
	_check_truncation('thetaforms.theta.series_sum', N)

	if kind == ThetaKind.A_FN:
		return borwein_a(k, N)
	elif kind == ThetaKind.C_FN:
		return borwein_c(k, N)

	M = _base_order(N, k)
	return dilate(theta_f(*_SUM_SIDES[kind], M), k, N)



def phi(k, N):
	"""phi(q^k) truncated at q^N, from the sum of q^(k n^2)."""

	return series_sum(ThetaKind.PHI, k, N)



def psi(k, N):
	"""psi(q^k) truncated at q^N, from the sum of q^(k n(n+1)/2) over n >= 0."""

	return series_sum(ThetaKind.PSI, k, N)



def borwein_a(k, N):
	"""Computes a(q^k), the theta series of x^2 + xy + y^2.

	Parameters
	----------
	k : int
		The dilation factor, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The sum of q^(k(x^2 + xy + y^2)) over all integer pairs, truncated
		at q^N.
	"""

	_check_dilation('thetaforms.theta.borwein_a', k)
	_check_truncation('thetaforms.theta.borwein_a', N)

	M = _base_order(N, k)
	return dilate(binary_lattice_sum(1, 1, 1, 0, 0, M), k, N)



def borwein_c(k, N):
	"""Computes c(q^k), the sum of q^(k(x^2 + xy + y^2 + x + y)).

	Parameters
	----------
	k : int
		The dilation factor, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		c(q^k) truncated at q^N. It agrees with 3 E(q^3)^3 / E(q) in q^k.
	"""

	_check_dilation('thetaforms.theta.borwein_c', k)
	_check_truncation('thetaforms.theta.borwein_c', N)

	M = _base_order(N, k)
	return dilate(binary_lattice_sum(1, 1, 1, 1, 1, M), k, N)



_CHARACTERS = {
	'D-4' : lambda n: kronecker(-4, n),
	'D-2' : lambda n: kronecker(-2, n),
	'D-12' : lambda n: kronecker(-12, n),
	'D-3ALT' : lambda n: (1 if n % 2 else -1) * kronecker(-3, n),
}



def char_square_series(char_id, N):
	"""Computes the weighted square series sum_{n > 0} w(n) n q^(n^2).

	Parameters
	----------
	char_id : str
		One of ``'D-4'``, ``'D-2'``, ``'D-12'`` or ``'D-3ALT'``, selecting
		w(n) as the Kronecker symbol (-4/n), (-2/n), (-12/n) or
		(-1)^(n+1) (-3/n). The unicode minus and a missing hyphen
		(``'D4'``) are accepted as well.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The series truncated at q^N.

	Examples
	--------
	The series for ``'D-4'`` equals q E(q^8)^3 and the one for ``'D-2'``
	equals q E(-q^8)^3.
	"""

	_check_truncation('thetaforms.theta.char_square_series', N)

	key = str(char_id).upper().replace('−', '-')
	if not key.startswith('D-'):
		key = 'D-' + key[1:] if key.startswith('D') else key
	if key not in _CHARACTERS:
		raise InputError('thetaforms.theta.char_square_series', 'char_id', f'Unknown character {char_id}. Choose one of {", ".join(_CHARACTERS)}.')

	weight = _CHARACTERS[key]
	array = np.zeros(N + 1, dtype=np.int64)
	for n in range(1, isqrt(N) + 1):
		array[n*n] = weight(n) * n

	return QSeries(array, N)
