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

"""Exact truncated power series in q.

A :py:class:`QSeries` stores the coefficients of q^0, ..., q^trunc as a
dense numpy array of signed 64 bit integers. Every operation checks for
overflow and raises a :py:class:`CoefficientOverflowError
<thetaforms._exceptions.CoefficientOverflowError>` instead of wrapping
around. Binary operations on series of different truncation truncate to
the smaller one.

The module also contains a small bounded Laurent layer in a second
variable z, which is used to check the quintuple product identity.
"""

import numbers
import time

import numpy as np

from ._exceptions import CoefficientOverflowError, InputError
from .utils import _check_truncation, integer_interval



INT64_MAX = int(np.iinfo(np.int64).max)
# products whose float bound stays below this are computed in int64 directly
_SAFE_BOUND = float(2**62)



def _from_exact(values, operation):
	"""Converts exact (Python integer) values to an int64 array.

	Parameters
	----------
	values : numpy.ndarray
		Array of dtype object holding Python integers.
	operation : str
		Name of the operation, used in the error message.

	Returns
	-------
	numpy.ndarray
		The values as int64 array.
	"""

	if len(values) > 0:
		largest = max(abs(int(v)) for v in values)
		if largest > INT64_MAX:
			raise CoefficientOverflowError(operation, f'A coefficient of absolute value {largest} does not fit into 64 bits.')

	return np.array([int(v) for v in values], dtype=np.int64)



def _max_abs(array):
	if len(array) == 0:
		return 0
	return int(np.abs(array).max())



class QSeries:
	"""A truncated formal power series with exact integer coefficients.

	The series is immutable: the coefficient array is flagged read-only
	and all operations return new objects.

	Examples
	--------
	Create 1 + 2q + 2q^4 and square it ::

	    from thetaforms.series import QSeries
	    s = QSeries([1, 2, 0, 0, 2])
	    t = s * s
	    t.coefficient(4)  # 4
	"""

	def __init__(self, coeffs, trunc=None):
		"""Initializes self.

		Parameters
		----------
		coeffs : array_like
			The coefficients, starting with the constant term. Integers
			of any size are accepted, but have to fit into 64 bits.
		trunc : int or None, optional
			The (inclusive) truncation order. Shorter coefficient lists
			are padded with zeros, longer ones are cut. If this is ``None``,
			``len(coeffs) - 1`` is used. Default is ``None``.
		"""

		if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
			array = coeffs
		else:
			raw = np.asarray(coeffs)
			if raw.dtype.kind in ('i', 'u') and raw.dtype.itemsize <= 8 and not (raw.dtype.kind == 'u' and raw.dtype.itemsize == 8):
				array = raw.astype(np.int64)
			elif raw.dtype.kind in ('i', 'u', 'O'):
				array = _from_exact(raw.astype(object).ravel(), 'QSeries')
			elif raw.size == 0:
				array = np.zeros(0, dtype=np.int64)
			else:
				raise InputError('thetaforms.series.QSeries', 'coeffs', 'The coefficients have to be integers.')

		array = array.ravel()

		if trunc is None:
			trunc = len(array) - 1
		_check_truncation('thetaforms.series.QSeries', trunc)

		if len(array) > trunc + 1:
			array = array[:trunc + 1].copy()
		elif len(array) < trunc + 1:
			padded = np.zeros(trunc + 1, dtype=np.int64)
			padded[:len(array)] = array
			array = padded
		else:
			array = array.copy()

		array.setflags(write=False)
		self._coeffs = array
		self._trunc = int(trunc)



	@classmethod
	def zero(cls, trunc):
		"""The zero series truncated at q^trunc."""

		return cls(np.zeros(trunc + 1, dtype=np.int64), trunc)



	@classmethod
	def one(cls, trunc):
		"""The constant series 1 truncated at q^trunc."""

		return cls.monomial(0, trunc)



	@classmethod
	def monomial(cls, exponent, trunc, coefficient=1):
		"""The series coefficient * q^exponent truncated at q^trunc.

		Exponents beyond the truncation give the zero series.
		"""

		array = np.zeros(trunc + 1, dtype=np.int64)
		if 0 <= exponent <= trunc:
			array[exponent] = coefficient
		return cls(array, trunc)



	@property
	def coeffs(self):
		"""numpy.ndarray : The read-only coefficient array of length trunc + 1."""

		return self._coeffs



	@property
	def trunc(self):
		"""int : The inclusive truncation order."""

		return self._trunc



	def coefficient(self, n):
		"""Returns the coefficient of q^n as a Python integer.

		Parameters
		----------
		n : int
			The exponent, has to satisfy 0 <= n <= trunc.

		Returns
		-------
		int
			The coefficient.
		"""

		if not 0 <= n <= self._trunc:
			raise InputError('thetaforms.series.QSeries.coefficient', 'n', f'The exponent has to lie between 0 and {self._trunc}.')

		return int(self._coeffs[n])



	def __getitem__(self, n):
		return self.coefficient(n)



	def __len__(self):
		return self._trunc + 1



	def to_list(self):
		"""Returns the coefficients as a list of Python integers."""

		return [int(c) for c in self._coeffs]



	def nonzero_count(self):
		"""Returns the number of non-zero coefficients."""

		return int(np.count_nonzero(self._coeffs))



	def __eq__(self, other):
		if not isinstance(other, QSeries):
			return NotImplemented
		return self._trunc == other._trunc and np.array_equal(self._coeffs, other._coeffs)



	__hash__ = None



	def __repr__(self):
		terms = []
		for n in np.nonzero(self._coeffs)[0][:8]:
			c = int(self._coeffs[n])
			if n == 0:
				terms.append(str(c))
			elif c == 1:
				terms.append(f'q^{n}')
			else:
				terms.append(f'{c}*q^{n}')
		body = ' + '.join(terms) if terms else '0'
		if np.count_nonzero(self._coeffs) > 8:
			body += ' + ...'
		return f'QSeries({body}, trunc={self._trunc})'



	def __add__(self, other):
		if isinstance(other, numbers.Integral):
			other = QSeries.monomial(0, self._trunc, int(other))
		if not isinstance(other, QSeries):
			return NotImplemented
		return add(self, other)



	__radd__ = __add__



	def __sub__(self, other):
		if isinstance(other, numbers.Integral):
			other = QSeries.monomial(0, self._trunc, int(other))
		if not isinstance(other, QSeries):
			return NotImplemented
		return sub(self, other)



	def __rsub__(self, other):
		if isinstance(other, numbers.Integral):
			return sub(QSeries.monomial(0, self._trunc, int(other)), self)
		return NotImplemented



	def __neg__(self):
		return neg(self)



	def __mul__(self, other):
		if isinstance(other, numbers.Integral):
			return scale(int(other), self)
		if not isinstance(other, QSeries):
			return NotImplemented
		return mul(self, other)



	__rmul__ = __mul__



	def __pow__(self, k):
		return power(self, k)



def _common(a, b):
	trunc = min(a.trunc, b.trunc)
	return a.coeffs[:trunc + 1], b.coeffs[:trunc + 1], trunc



def add(a, b):
	"""Adds two series.

	Parameters
	----------
	a : QSeries
		First summand.
	b : QSeries
		Second summand.

	Returns
	-------
	QSeries
		The sum, truncated at the smaller truncation order.
	"""

	x, y, trunc = _common(a, b)
	if _max_abs(x) + _max_abs(y) > INT64_MAX:
		return QSeries(_from_exact(x.astype(object) + y.astype(object), 'add'), trunc)
	return QSeries(x + y, trunc)



def sub(a, b):
	"""Subtracts the series b from a, truncated at the smaller truncation order."""

	x, y, trunc = _common(a, b)
	if _max_abs(x) + _max_abs(y) > INT64_MAX:
		return QSeries(_from_exact(x.astype(object) - y.astype(object), 'sub'), trunc)
	return QSeries(x - y, trunc)



def neg(a):
	"""Negates a series."""

	return QSeries(-a.coeffs, a.trunc)



def scale(k, a):
	"""Multiplies every coefficient of a by the integer k."""

	k = int(k)
	if abs(k) * _max_abs(a.coeffs) > INT64_MAX:
		return QSeries(_from_exact(a.coeffs.astype(object) * k, 'scale'), a.trunc)
	return QSeries(a.coeffs * k, a.trunc)



def mul(a, b):
	"""Computes the Cauchy product of two series.

	Parameters
	----------
	a : QSeries
		First factor.
	b : QSeries
		Second factor.

	Returns
	-------
	QSeries
		The product truncated at the smaller truncation order.

	Notes
	-----
	The product is computed with :py:func:`numpy.convolve` in 64 bit
	arithmetic whenever max|a_i| * sum|b_j| stays safely below 2^63.
	Otherwise the convolution is carried out with Python integers and the
	result is range checked.
	"""

	x, y, trunc = _common(a, b)

	nonzero_x = np.nonzero(x)[0]
	nonzero_y = np.nonzero(y)[0]
	if len(nonzero_x) == 0 or len(nonzero_y) == 0:
		return QSeries.zero(trunc)

	# trailing zeros carry no information for the truncated product
	x = x[:nonzero_x[-1] + 1]
	y = y[:nonzero_y[-1] + 1]

	bound = float(np.abs(x).max()) * float(np.abs(y).sum(dtype=np.float64))
	if bound < _SAFE_BOUND:
		product = np.convolve(x, y)[:trunc + 1]
	else:
		product = _from_exact(np.convolve(x.astype(object), y.astype(object))[:trunc + 1], 'mul')

	return QSeries(product, trunc)



def power(s, k):
	"""Raises a series to a non-negative integer power by repeated squaring."""

	if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 0:
		raise InputError('thetaforms.series.power', 'k', 'The exponent has to be a non-negative integer.')

	result = QSeries.one(s.trunc)
	base = s
	while k > 0:
		if k & 1:
			result = mul(result, base)
		k >>= 1
		if k > 0:
			base = mul(base, base)

	return result



def divide(a, b):
	"""Divides the series a by the series b.

	Parameters
	----------
	a : QSeries
		The dividend.
	b : QSeries
		The divisor. Its constant term has to be 1 or -1, so that the
		quotient has integer coefficients.

	Returns
	-------
	QSeries
		The unique series c with b * c = a, truncated at the smaller
		truncation order.

	Notes
	-----
	The quotient is obtained from the forward recurrence
	c_n = b_0 (a_n - sum_{i >= 1} b_i c_{n-i}), where the sum only runs over
	the non-zero coefficients of b. Dividing by E(q^k) therefore costs
	O(N sqrt(N)) operations.
	"""

	x, y, trunc = _common(a, b)
	if int(y[0]) not in (1, -1):
		raise InputError('thetaforms.series.divide', 'b', 'The constant term of the divisor has to be 1 or -1.')

	quotient = _divide_exact([int(v) for v in x], y)

	return QSeries(_from_exact(np.array(quotient, dtype=object), 'divide'), trunc)



def _divide_exact(dividend, divisor):
	"""Divides a list of Python integers by an int64 array with unit constant term.

	The result is a list of Python integers of the same length as the
	dividend and is not range checked, so that chained divisions may pass
	through intermediate quotients of arbitrary size.
	"""

	b0 = int(divisor[0])
	offsets = [int(i) for i in np.nonzero(divisor)[0] if 0 < i < len(dividend)]
	values = [int(divisor[i]) for i in offsets]

	quotient = [0] * len(dividend)
	for n in range(len(dividend)):
		acc = dividend[n]
		for i, v in zip(offsets, values):
			if i > n:
				break
			acc -= v * quotient[n - i]
		quotient[n] = b0 * acc

	return quotient



def reciprocal(s):
	"""Returns 1 / s for a series with constant term 1 or -1."""

	return divide(QSeries.one(s.trunc), s)



def dilate(s, k, limit=None):
	"""Substitutes q^k for q.

	Parameters
	----------
	s : QSeries
		The series.
	k : int
		The dilation factor, has to be positive.
	limit : int or None, optional
		Cap for the truncation order of the result. Default is ``None``.

	Returns
	-------
	QSeries
		The series s(q^k), truncated at min(k * s.trunc, limit).
	"""

	if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 1:
		raise InputError('thetaforms.series.dilate', 'k', 'The dilation factor has to be a positive integer.')

	trunc = s.trunc * k
	if limit is not None:
		_check_truncation('thetaforms.series.dilate', limit)
		trunc = min(trunc, limit)

	array = np.zeros(trunc + 1, dtype=np.int64)
	array[::k] = s.coeffs[:trunc // k + 1]

	return QSeries(array, trunc)



def alternate(s):
	"""Substitutes -q for q, i.e., negates the odd coefficients."""

	array = s.coeffs.copy()
	array[1::2] = -array[1::2]

	return QSeries(array, s.trunc)



def project(s, t, r):
	"""Keeps the coefficients at exponents congruent to r modulo t.

	Parameters
	----------
	s : QSeries
		The series.
	t : int
		The modulus, has to be positive.
	r : int
		The residue, has to satisfy 0 <= r < t.

	Returns
	-------
	QSeries
		The projected series. Exponents are not relabelled.
	"""

	if isinstance(t, bool) or not isinstance(t, numbers.Integral) or t < 1:
		raise InputError('thetaforms.series.project', 't', 'The modulus has to be a positive integer.')
	if not isinstance(r, numbers.Integral) or not 0 <= r < t:
		raise InputError('thetaforms.series.project', 'r', f'The residue has to lie between 0 and {t - 1}.')

	array = np.zeros(s.trunc + 1, dtype=np.int64)
	array[r::t] = s.coeffs[r::t]

	return QSeries(array, s.trunc)



def shift(s, e):
	"""Multiplies the series by q^e, keeping the truncation order."""

	if isinstance(e, bool) or not isinstance(e, numbers.Integral) or e < 0:
		raise InputError('thetaforms.series.shift', 'e', 'The shift has to be a non-negative integer.')

	array = np.zeros(s.trunc + 1, dtype=np.int64)
	if e <= s.trunc:
		array[e:] = s.coeffs[:s.trunc + 1 - e]

	return QSeries(array, s.trunc)



def truncate(s, N):
	"""Truncates the series at q^N, N may not exceed the current order."""

	_check_truncation('thetaforms.series.truncate', N)
	if N > s.trunc:
		raise InputError('thetaforms.series.truncate', 'N', f'Cannot extend a series known up to q^{s.trunc} to q^{N}.')

	return QSeries(s.coeffs[:N + 1], N)



def first_mismatch(a, b):
	"""Locates the first differing coefficient of two series.

	Parameters
	----------
	a : QSeries
		First series.
	b : QSeries
		Second series.

	Returns
	-------
	tuple[int, int, int] or None
		``(degree, a_coeff, b_coeff)`` for the smallest differing degree
		up to the smaller truncation order, or ``None`` if they agree.
	"""

	x, y, _ = _common(a, b)
	differing = np.nonzero(x != y)[0]
	if len(differing) == 0:
		return None

	n = int(differing[0])
	return n, int(x[n]), int(y[n])



def _multiply_factors(array, factors, operation):
	"""Multiplies a coefficient array by factors (1 - c q^e).

	Parameters
	----------
	array : numpy.ndarray
		The int64 coefficient array, it may be modified in place.
	factors : list[tuple[int, int]]
		Pairs (c, e) with e >= 0.
	operation : str
		Name for error messages.

	Returns
	-------
	numpy.ndarray
		The int64 coefficients of the product.

	Notes
	-----
	Partial products may be much larger than the final one. As soon as
	a partial product could leave the 64 bit range, the computation
	continues with Python integers and only the final result is range
	checked.
	"""

	exact = False
	for c, e in factors:
		if not exact and _max_abs(array) * (1 + abs(c)) > INT64_MAX:
			array = array.astype(object)
			exact = True
		if e == 0:
			array = array * (1 - c)
		else:
			array[e:] = array[e:] - c * array[:-e]

	if exact:
		return _from_exact(array, operation)
	return array



def _pochhammer_factors(sign, r, step, N):
	"""Lists the factors (1 - sign q^(r + n step)) with exponent <= N."""

	factors = []
	e = r
	while e <= N:
		factors.append((sign, e))
		e += step

	return factors



def pochhammer(r, sign, step, N):
	"""Computes the infinite product (a; q^step) for a = sign * q^r.

	Parameters
	----------
	r : int
		The exponent of the monomial a, non-negative.
	sign : int
		The sign of the monomial a, either 1 or -1.
	step : int
		The exponent of the base, positive.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The product prod_{n >= 0} (1 - sign q^(r + n step)) truncated at q^N.
		Factors with exponent larger than N are dropped.

	Examples
	--------
	The Euler function E(q) is ``pochhammer(1, 1, 1, N)``.
	"""

	_check_truncation('thetaforms.series.pochhammer', N)
	if sign not in (1, -1):
		raise InputError('thetaforms.series.pochhammer', 'sign', 'The sign has to be 1 or -1.')
	if isinstance(r, bool) or not isinstance(r, numbers.Integral) or r < 0:
		raise InputError('thetaforms.series.pochhammer', 'r', 'The exponent has to be a non-negative integer.')
	if isinstance(step, bool) or not isinstance(step, numbers.Integral) or step < 1:
		raise InputError('thetaforms.series.pochhammer', 'step', 'The step has to be a positive integer.')
	if r == 0 and sign == 1:
		raise InputError('thetaforms.series.pochhammer', 'r', 'The first factor (1 - 1) vanishes identically.')

	array = np.zeros(N + 1, dtype=np.int64)
	array[0] = 1
	array = _multiply_factors(array, _pochhammer_factors(sign, r, step, N), 'pochhammer')

	return QSeries(array, N)



class BiLaurent:
	"""A Laurent polynomial in z whose coefficients are truncated series in q.

	Only non-zero z-coefficients are stored. All stored series share
	the same truncation order.
	"""

	def __init__(self, terms, trunc):
		"""Initializes self.

		Parameters
		----------
		terms : dict[int, QSeries or array_like]
			Map from the z-exponent to the corresponding series in q.
		trunc : int
			The shared truncation order in q.
		"""

		_check_truncation('thetaforms.series.BiLaurent', trunc)
		self._trunc = int(trunc)
		self._terms = {}
		for exponent, value in terms.items():
			if not isinstance(value, QSeries):
				value = QSeries(value, trunc)
			if value.trunc < trunc:
				raise InputError('thetaforms.series.BiLaurent', 'terms', 'All series have to be known up to the shared truncation order.')
			value = truncate(value, trunc)
			if value.nonzero_count() > 0:
				self._terms[int(exponent)] = value



	@property
	def trunc(self):
		"""int : The shared truncation order in q."""

		return self._trunc



	def z_exponents(self):
		"""Returns the sorted list of z-exponents with non-zero coefficient."""

		return sorted(self._terms)



	def __getitem__(self, exponent):
		return self._terms.get(exponent, QSeries.zero(self._trunc))



	def __eq__(self, other):
		if not isinstance(other, BiLaurent):
			return NotImplemented
		return self._trunc == other._trunc and self.z_exponents() == other.z_exponents() and \
			all(self._terms[k] == other._terms[k] for k in self._terms)



	__hash__ = None



def _quintuple_sum_side(N):
	terms = {}

	def deposit(z_exponent, q_exponent, coefficient):
		array = terms.setdefault(z_exponent, np.zeros(N + 1, dtype=np.int64))
		array[q_exponent] += coefficient

	# q^(3n^2 - 2n) z^(3n)
	interval = integer_interval(3, -2, -N)
	if interval is not None:
		for n in range(interval[0], interval[1] + 1):
			deposit(3*n, 3*n*n - 2*n, 1)
	# - q^(3n^2 + 4n + 1) z^(-3n - 1)
	interval = integer_interval(3, 4, 1 - N)
	if interval is not None:
		for n in range(interval[0], interval[1] + 1):
			deposit(-3*n - 1, 3*n*n + 4*n + 1, -1)

	return BiLaurent(terms, N)



def _quintuple_product_side(N):
	# factors (1 - c z^j q^e) as triples (c, j, e)
	factors = [(1, 0, e) for e in range(2, N + 1, 2)]
	factors += [(1, 1, e) for e in range(1, N + 1, 2)]
	factors += [(1, -1, e) for e in range(1, N + 1, 2)]
	factors += [(1, 2, e) for e in range(0, N + 1, 4)]
	factors += [(1, -2, e) for e in range(4, N + 1, 4)]

	terms = {0 : np.zeros(N + 1, dtype=np.int64)}
	terms[0][0] = 1

	for c, j, e in factors:
		updated = {k : v.copy() for k, v in terms.items()}
		for k, v in terms.items():
			if e > N:
				continue
			if _max_abs(v) * 2 > INT64_MAX:
				raise CoefficientOverflowError('bivariate_product_check', 'The partial product exceeds 64 bits.')
			target = updated.setdefault(k + j, np.zeros(N + 1, dtype=np.int64))
			if e == 0:
				target -= c * v
			else:
				target[e:] -= c * v[:-e]
		terms = {k : v for k, v in updated.items() if np.any(v)}

	return BiLaurent(terms, N)



def bivariate_product_check(N, z_report=None):
	"""Compares both sides of the quintuple product identity.

	The sum side is sum_n q^(3n^2 + n) (z^(3n) q^(-3n) - q^(3n+1) z^(-3n-1))
	and the product side is
	(q^2;q^2)(qz;q^2)(q/z;q^2)(z^2;q^4)(q^4/z^2;q^4), both expanded as
	Laurent polynomials in z with coefficients truncated at q^N.

	Parameters
	----------
	N : int
		The truncation order in q, at least 1.
	z_report : list[int] or int or None, optional
		Restricts the comparison to the given z-exponents. An integer m
		selects all exponents with absolute value at most m. If this is
		``None``, every stored exponent of either side is compared.
		Default is ``None``.

	Returns
	-------
	thetaforms.verification.Report
		The outcome under the name ``'qpi'``. A mismatch records the
		q-degree and carries the z-exponent in ``z_exponent``.
	"""

	from .verification import Mismatch, Report

	_check_truncation('thetaforms.series.bivariate_product_check', N, 1)
	start = time.perf_counter()

	lhs = _quintuple_sum_side(N)
	rhs = _quintuple_product_side(N)

	exponents = sorted(set(lhs.z_exponents()) | set(rhs.z_exponents()))
	if z_report is not None:
		if isinstance(z_report, numbers.Integral):
			exponents = [k for k in exponents if abs(k) <= z_report]
		else:
			exponents = sorted(set(int(k) for k in z_report))

	mismatch = None
	for k in exponents:
		found = first_mismatch(lhs[k], rhs[k])
		if found is not None:
			mismatch = Mismatch(found[0], found[1], found[2], z_exponent=k)
			break

	elapsed = int(round(1000 * (time.perf_counter() - start)))
	return Report('qpi', N, 'PASS' if mismatch is None else 'FAIL', mismatch, elapsed)
