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

"""Kronecker symbols, factorization and closed formulas for squares.

The representation numbers of a perfect square n^2 by the forms
x^2 + y^2 + z^2, x^2 + y^2 + 2z^2 and x^2 + y^2 + 3z^2 (and by the sum of
the two forms (1,3,36) and (3,4,9)) are multiplicative functions of n.
For an odd prime power p^v dividing n (away from the primes attached to
the form) the local factor is

    sigma(p^v) - chi(p) sigma(p^(v-1)),

where sigma(p^k) = 1 + p + ... + p^k and chi is a Kronecker character.
The local factors at 2 and 3 are given separately for each form.
"""

import dataclasses
import enum
import numbers

import sympy

from ._exceptions import ClaimViolationError, InputError
from .utils import two_adic_split



def kronecker(a, n):
	"""Computes the Kronecker symbol (a/n).

	Parameters
	----------
	a : int
		The upper argument.
	n : int
		The lower argument, any integer.

	Returns
	-------
	int
		-1, 0 or 1. For odd positive n this is the Jacobi symbol, (a/0) is 1
		for a = 1 or -1 and 0 otherwise.

	Examples
	--------
	>>> kronecker(-1, 5), kronecker(-2, 3), kronecker(-4, 6)
	(1, 1, 0)
	"""

	a = int(a)
	n = int(n)

	if n == 0:
		return 1 if a in (1, -1) else 0
	if a % 2 == 0 and n % 2 == 0:
		return 0

	result = 1
	if n < 0:
		n = -n
		if a < 0:
			result = -result

	v, n = two_adic_split(n)
	if v % 2 == 1 and a % 8 in (3, 5):
		result = -result

	# Jacobi symbol for the odd part
	a %= n
	while a != 0:
		while a % 2 == 0:
			a //= 2
			if n % 8 in (3, 5):
				result = -result
		a, n = n, a
		if a % 4 == 3 and n % 4 == 3:
			result = -result
		a %= n

	return result if n == 1 else 0



@dataclasses.dataclass(frozen=True)
class Factorization:
	"""The prime factorization of a positive integer.

	Attributes
	----------
	n : int
		The factored integer.
	factors : tuple[tuple[int, int]]
		The pairs (p, v) with strictly increasing primes p and positive
		exponents v. It is empty for n = 1.
	"""

	n : int
	factors : tuple

	def __post_init__(self):
		factors = tuple((int(p), int(v)) for p, v in self.factors)
		product = 1
		previous = 1
		for p, v in factors:
			if p <= previous or v < 1 or not sympy.isprime(p):
				raise InputError('thetaforms.divisors.Factorization', 'factors', f'{factors} is not an ordered list of prime powers.')
			product *= p**v
			previous = p
		if product != self.n:
			raise InputError('thetaforms.divisors.Factorization', 'factors', f'The factors multiply to {product}, not {self.n}.')
		object.__setattr__(self, 'factors', factors)



	def __iter__(self):
		return iter(self.factors)



	def primes(self):
		"""Returns the list of prime divisors."""

		return [p for p, _ in self.factors]



	def exponent(self, p):
		"""Returns the exponent of the prime p in n."""

		for prime, v in self.factors:
			if prime == p:
				return v
		return 0



_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)
_TRIAL_LIMIT = 10**6
_MAX_N = 2**63 - 1



def factorize(n):
	"""Factors a positive integer.

	Trial division by 2, 3, 5 and a mod 30 wheel, stopping as soon as the
	remaining cofactor is prime. Cofactors whose prime divisors all exceed
	10^6 are split with :py:func:`sympy.factorint`.

	Parameters
	----------
	n : int
		The integer, 1 <= n <= 2^63 - 1.

	Returns
	-------
	Factorization
		The factorization of n.
	"""

	if isinstance(n, bool) or not isinstance(n, numbers.Integral) or not 1 <= n <= _MAX_N:
		raise InputError('thetaforms.divisors.factorize', 'n', 'Only integers between 1 and 2^63 - 1 can be factored.')

	n = int(n)
	m = n
	factors = []

	def strip(p):
		nonlocal m
		v = 0
		while m % p == 0:
			m //= p
			v += 1
		if v > 0:
			factors.append((p, v))
		return v > 0

	for p in (2, 3, 5):
		strip(p)

	p = 7
	i = 0
	cofactor_prime = m > 1 and sympy.isprime(m)
	while m > 1 and not cofactor_prime and p*p <= m and p <= _TRIAL_LIMIT:
		if strip(p):
			cofactor_prime = m > 1 and sympy.isprime(m)
		p += _WHEEL[i]
		i = (i + 1) % len(_WHEEL)

	if m > 1:
		if cofactor_prime or p*p > m:
			factors.append((m, 1))
		else:
			factors.extend(sorted(sympy.factorint(m).items()))

	return Factorization(n, tuple(factors))



def _sigma(p, v):
	return sum(p**k for k in range(v + 1))



def _local_factor(p, v, chi):
	return _sigma(p, v) - chi * _sigma(p, v - 1)



class HurwitzFormId(enum.Enum):
	"""Forms with a closed formula for the representations of squares.

	"""

	F111 = 'F111'
	F112 = 'F112'
	F113 = 'F113'
	PAIR = 'PAIR'



class EqualityKind(enum.Enum):
	"""Prime divisor conditions for the equality cases.

	"""

	M_MOD4 = 'M_MOD4'
	E_MOD8 = 'E_MOD8'
	W_MOD3 = 'W_MOD3'



class InequalityKind(enum.Enum):
	"""Lower bounds for the normalized representation numbers of squares.

	"""

	HC1 = 'HC1'
	HC2 = 'HC2'
	HC3 = 'HC3'
	HC4 = 'HC4'



def _as_enum(cls, value, obj, param):
	if isinstance(value, cls):
		return value
	key = str(value).upper()
	if key.startswith('PAIR'):
		key = 'PAIR'
	try:
		return cls[key]
	except KeyError:
		raise InputError(obj, param, f'Unknown tag {value}. Choose one of {", ".join(member.name for member in cls)}.')



def _check_positive(obj, n):
	if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
		raise InputError(obj, 'n', 'Has to be a positive integer.')



def hurwitz_rep_of_square(form_id, n):
	"""Predicts the number of representations of n^2 by a form.

	Parameters
	----------
	form_id : HurwitzFormId or str
		``F111``, ``F112`` and ``F113`` stand for x^2 + y^2 + z^2,
		x^2 + y^2 + 2z^2 and x^2 + y^2 + 3z^2. ``PAIR`` stands for the
		sum of the representation numbers of x^2 + 3y^2 + 36z^2 and
		3x^2 + 4y^2 + 9z^2.
	n : int
		A positive integer.

	Returns
	-------
	int
		The representation number of n^2.

	Notes
	-----
	Write n = 2^a 3^b m with gcd(m, 6) = 1. The results are

	- F111: 6 prod_{p > 2} L(p, (-1/p))
	- F112: 4 f(a) prod_{p > 2} L(p, (-2/p)) with f(0) = 1 and f(a) = 3 else
	- F113: 4 (2^(a+1) - 1) prod_{p > 3} L(p, (-3/p))
	- PAIR: 2 (3 2^a - 2) g(b) prod_{p > 3} L(p, (-3/p)) with g(0) = 1 and
	  g(b) = 2 else

	where L(p, chi) is the local factor of the module docstring.
	"""

	form_id = _as_enum(HurwitzFormId, form_id, 'thetaforms.divisors.hurwitz_rep_of_square', 'form_id')
	_check_positive('thetaforms.divisors.hurwitz_rep_of_square', n)

	factorization = factorize(n)
	a = factorization.exponent(2)
	b = factorization.exponent(3)

	if form_id == HurwitzFormId.F111:
		result = 6
		character, skip = -4, 2
	elif form_id == HurwitzFormId.F112:
		result = 4 * (3 if a > 0 else 1)
		character, skip = -2, 2
	elif form_id == HurwitzFormId.F113:
		result = 4 * (2**(a + 1) - 1)
		character, skip = -3, 3
	else:
		result = 2 * (3 * 2**a - 2) * (2 if b > 0 else 1)
		character, skip = -3, 3

	for p, v in factorization:
		if p > skip:
			result *= _local_factor(p, v, kronecker(character, p))

	return result



def equality_class(kind, n):
	"""Checks whether all prime divisors of n lie in a fixed class.

	Parameters
	----------
	kind : EqualityKind or str
		``M_MOD4``: all primes are 1 mod 4, n has to be odd.
		``E_MOD8``: all primes are 1 or 3 mod 8, n has to be odd.
		``W_MOD3``: all primes are 1 mod 3, n must not be divisible by 3.
	n : int
		A positive integer. n = 1 is always in the class.

	Returns
	-------
	bool
		``True`` if every prime divisor satisfies the congruence.
	"""

	kind = _as_enum(EqualityKind, kind, 'thetaforms.divisors.equality_class', 'kind')
	_check_positive('thetaforms.divisors.equality_class', n)

	if kind in (EqualityKind.M_MOD4, EqualityKind.E_MOD8) and n % 2 == 0:
		raise InputError('thetaforms.divisors.equality_class', 'n', f'The class {kind.name} is only defined for odd integers.')
	if kind == EqualityKind.W_MOD3 and n % 3 == 0:
		raise InputError('thetaforms.divisors.equality_class', 'n', 'The class W_MOD3 is only defined for integers prime to 3.')

	primes = factorize(n).primes()
	if kind == EqualityKind.M_MOD4:
		return all(p % 4 == 1 for p in primes)
	elif kind == EqualityKind.E_MOD8:
		return all(p % 8 in (1, 3) for p in primes)
	else:
		return all(p % 3 == 1 for p in primes)



_INEQUALITIES = {
	InequalityKind.HC1 : (HurwitzFormId.F111, 6, EqualityKind.M_MOD4),
	InequalityKind.HC2 : (HurwitzFormId.F112, 4, EqualityKind.E_MOD8),
	InequalityKind.HC3 : (HurwitzFormId.F113, 4, EqualityKind.W_MOD3),
	InequalityKind.HC4 : (HurwitzFormId.PAIR, 2, EqualityKind.W_MOD3),
}



@dataclasses.dataclass(frozen=True)
class InequalityReport:
	"""Outcome of a lower bound check for a normalized square count.

	"""

	kind : str
	n : int
	lhs : int
	rhs : int
	equality_predicted : bool
	equality_observed : bool

	def to_dict(self):
		return dataclasses.asdict(self)



def inequality_report(kind, n):
	"""Checks that the normalized representation number of n^2 is at least n.

	Parameters
	----------
	kind : InequalityKind or str
		``HC1`` (x^2+y^2+z^2, divided by 6), ``HC2`` (x^2+y^2+2z^2, by 4),
		``HC3`` (x^2+y^2+3z^2, by 4) or ``HC4`` (the pair (1,3,36) and
		(3,4,9), by 2).
	n : int
		A positive integer, odd for HC1 and HC2, prime to 3 for HC3 and HC4.

	Returns
	-------
	InequalityReport
		The normalized count, the bound n and whether equality is predicted
		by :py:func:`equality_class` and observed.

	Raises
	------
	ClaimViolationError
		If the normalized count is smaller than n.
	"""

	kind = _as_enum(InequalityKind, kind, 'thetaforms.divisors.inequality_report', 'kind')
	form_id, norm, equality_kind = _INEQUALITIES[kind]

	predicted = equality_class(equality_kind, n)
	lhs = hurwitz_rep_of_square(form_id, n) // norm

	if lhs < n:
		raise ClaimViolationError(kind.name, n, f'The normalized count {lhs} is smaller than {n}.')

	return InequalityReport(kind.name, int(n), lhs, int(n), predicted, lhs == n)
