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

"""Excluded sets of catalogued ternary forms and checks of related claims.

Every catalogued form comes with a predicate describing exactly the
positive integers it does not represent. The predicates are pure
arithmetic (congruences, powers of 4 or 9, and square classes) and are
checked against the lattice enumeration by :py:func:`scan_excluded`.

The remaining functions check further arithmetic statements clause by
clause over a range of arguments. They return a dictionary mapping the
clause name to the sorted list of arguments where the clause fails, so an
empty list means the clause holds throughout the range.
"""

import dataclasses
import time
from math import isqrt

from ._exceptions import ClaimViolationError, InputError
from .divisors import equality_class, kronecker
from .lattice import JP1, JP2, TernaryForm, rep_count, restricted_preset, theta_series
from .series import mul, shift
from .theta import psi
from .utils import _check_truncation, two_adic_split



@dataclasses.dataclass(frozen=True)
class ExclusionVerdict:
	"""Whether an integer is excluded, and by which clause.

	Attributes
	----------
	excluded : bool
		``True`` if the form does not represent the integer.
	reason : str or None
		One of ``'POW4_8M7'``, ``'POW_CLASS'``, ``'CONGRUENCE'`` or
		``'SQUARE_CLASS'``. ``None`` if and only if the integer is not
		excluded.
	detail : str or None
		The matching clause, e.g. ``'4^1(8m+7)'`` or ``'5^2'``.
	"""

	excluded : bool
	reason : str = None
	detail : str = None

	def to_dict(self):
		return dataclasses.asdict(self)



@dataclasses.dataclass(frozen=True)
class CatalogForm:
	"""A catalogued form together with the predicate for its excluded set.

	"""

	id : str
	form : TernaryForm
	predicate : object



_CATALOG = {}



def register_catalog_form(form_id, form):
	"""Decorator registering the excluded-set predicate of a form.

	The decorated function takes a positive integer n and returns ``None``
	if n is represented, or a pair (reason, detail) if it is excluded.

	Parameters
	----------
	form_id : str
		The catalog key.
	form : TernaryForm
		The form, which has to be positive definite.

	Returns
	-------
	function
		The decorator.
	"""

	def decorator(predicate):
		key = str(form_id).upper()
		_CATALOG[key] = CatalogForm(key, form, predicate)
		return predicate

	return decorator



def catalog_ids():
	"""Returns the ids of all catalogued forms."""

	return list(_CATALOG)



def catalog_form(form_id):
	"""Returns the :py:class:`CatalogForm` for an id (case insensitive)."""

	key = str(form_id).upper()
	if key not in _CATALOG:
		raise InputError('thetaforms.classifier', 'form_id', f'Unknown catalog form {form_id}. Choose one of {", ".join(_CATALOG)}.')
	return _CATALOG[key]



def pow4res(n, mod, res, amax=None, base=4):
	"""Finds a with n = base^a k and k = res (mod mod).

	Parameters
	----------
	n : int
		A positive integer.
	mod : int
		The modulus of the class of k.
	res : int
		The residue of k.
	amax : int or None, optional
		The largest admissible exponent a. ``None`` means no limit.
	base : int, optional
		The base of the power, 4 by default.

	Returns
	-------
	int or None
		The smallest such a, or ``None`` if there is none.
	"""

	a = 0
	while True:
		if n % mod == res:
			return a
		if n % base != 0 or (amax is not None and a >= amax):
			return None
		n //= base
		a += 1



def _power_clause(n, mod, res, amax=None, base=4, label=None, reason='POW_CLASS'):
	a = pow4res(n, mod, res, amax, base)
	if a is None:
		return None
	return reason, f'{base}^{a}({label})'



def _square_class(n, kind, max_two_power):
	"""Tests n = (2^t u)^2 with t <= max_two_power and u in the class kind."""

	root = isqrt(n)
	if root*root != n:
		return None

	t, u = two_adic_split(root)
	if t > max_two_power:
		return None
	if kind == 'W_MOD3' and u % 3 == 0:
		return None
	if equality_class(kind, u):
		return 'SQUARE_CLASS', f'{root}^2'

	return None



@register_catalog_form('D111', TernaryForm(1, 1, 1))
def _d111(n):
	return _power_clause(n, 8, 7, label='8m+7', reason='POW4_8M7')



@register_catalog_form('D112', TernaryForm(1, 1, 2))
def _d112(n):
	return _power_clause(n, 16, 14, label='16m+14')



@register_catalog_form('D113', TernaryForm(1, 1, 3))
def _d113(n):
	return _power_clause(n, 9, 6, base=9, label='9m+6')



@register_catalog_form('D118', TernaryForm(1, 1, 8))
def _d118(n):
	if n % 4 == 3:
		return 'CONGRUENCE', '4m+3'
	if n % 16 == 6:
		return 'CONGRUENCE', '16m+6'
	return _power_clause(n, 16, 14, label='16m+14')



def _f1336_clauses(n):
	if n % 3 == 2:
		return 'CONGRUENCE', '3m+2'
	if n % 4 == 2:
		return 'CONGRUENCE', '4m+2'
	return _power_clause(n, 9, 6, base=9, label='9m+6')



@register_catalog_form('F_1_3_36', TernaryForm(1, 3, 36))
def _f1336(n):
	return _f1336_clauses(n)



@register_catalog_form('F_3_4_9', TernaryForm(3, 4, 9))
def _f349(n):
	return _f1336_clauses(n) or _square_class(n, 'W_MOD3', 0)



@register_catalog_form('JP1', JP1)
def _jp1(n):
	return _power_clause(n, 8, 7, label='8m+7', reason='POW4_8M7') \
		or _power_clause(n, 8, 3, 2, label='8m+3') \
		or _power_clause(n, 4, 2, 2, label='4m+2') \
		or _power_clause(n, 8, 5, 1, label='8m+5') \
		or _square_class(n, 'M_MOD4', 1)



@register_catalog_form('JP2', JP2)
def _jp2(n):
	if n % 8 == 5:
		return 'CONGRUENCE', '8m+5'
	return _power_clause(n, 8, 7, label='8m+7', reason='POW4_8M7') \
		or _power_clause(n, 8, 6, 2, label='8m+6') \
		or _power_clause(n, 8, 3, 3, label='8m+3') \
		or _power_clause(n, 8, 2, 1, label='8m+2') \
		or _square_class(n, 'M_MOD4', 2)



def excluded(form_id, n):
	"""Decides whether a catalogued form fails to represent n.

	Parameters
	----------
	form_id : str
		One of the catalog ids, e.g. ``'D111'`` or ``'JP1'``.
	n : int
		A positive integer.

	Returns
	-------
	ExclusionVerdict
		The verdict with the first matching clause.

	Examples
	--------
	>>> excluded('JP1', 25)
	ExclusionVerdict(excluded=True, reason='SQUARE_CLASS', detail='5^2')
	"""

	entry = catalog_form(form_id)
	if n < 1:
		raise InputError('thetaforms.classifier.excluded', 'n', 'Has to be a positive integer.')

	match = entry.predicate(int(n))
	if match is None:
		return ExclusionVerdict(False)

	return ExclusionVerdict(True, *match)



def scan_excluded(form_id, N_max, jobs=1, verbose=False):
	"""Compares the excluded-set predicate with the lattice enumeration.

	Parameters
	----------
	form_id : str
		The catalog id.
	N_max : int
		Every n = 1, ..., N_max is checked.
	jobs : int, optional
		Number of worker processes for the theta series. Default is 1.
	verbose : bool, optional
		Prints a summary line if ``True``. Default is ``False``.

	Returns
	-------
	list[int]
		All n where the predicate and the representation count disagree,
		in ascending order.
	"""

	entry = catalog_form(form_id)
	_check_truncation('thetaforms.classifier.scan_excluded', N_max, 1)

	start = time.perf_counter()
	theta = theta_series(entry.form, N_max, jobs)
	coeffs = theta.coeffs
	mismatches = [n for n in range(1, N_max + 1) if (entry.predicate(n) is not None) != (coeffs[n] == 0)]

	if verbose:
		print(f'Scan {entry.id:>8} {str(entry.form):>22} --- n <= {N_max} --- mismatches: {len(mismatches)}'
			  f' --- {time.perf_counter() - start:.2f} s')

	return mismatches



@dataclasses.dataclass(frozen=True)
class GenusMateRecord:
	"""Representation numbers of n by the genus mates (1,3,36) and (3,4,9).

	"""

	n : int
	r_1_3_36 : int
	r_3_4_9 : int
	relation : str
	expected_difference : int

	def to_dict(self):
		return dataclasses.asdict(self)



def _expected_genus_difference(n):
	"""The predicted value of r(1,3,36; n) - r(3,4,9; n) and the relation tag."""

	m = isqrt(n)
	if m*m != n:
		return 'NON_SQUARE', 0
	if m % 3 == 0:
		return 'NINE_SQUARE', 0
	sign = 1 if m % 2 == 1 else -1
	return 'SQUARE', 2*sign*kronecker(-3, m)*m



def genus_mate_compare(n):
	"""Compares the representation numbers of n by the two genus mates.

	The difference r(1,3,36; n) - r(3,4,9; n) vanishes unless n = m^2 is a
	square, where it equals 2 (-1)^(m+1) (-3/m) m. In particular it vanishes
	for n = 9m^2.

	Parameters
	----------
	n : int
		A positive integer.

	Returns
	-------
	GenusMateRecord
		Both counts, the relation tag ``'NON_SQUARE'``, ``'SQUARE'`` or
		``'NINE_SQUARE'`` and the predicted difference.

	Raises
	------
	ClaimViolationError
		If the observed difference differs from the predicted one.
	"""

	if n < 1:
		raise InputError('thetaforms.classifier.genus_mate_compare', 'n', 'Has to be a positive integer.')

	r1 = rep_count(catalog_form('F_1_3_36').form, n)
	r2 = rep_count(catalog_form('F_3_4_9').form, n)
	relation, difference = _expected_genus_difference(n)

	if r1 - r2 != difference:
		raise ClaimViolationError(f'genus mate difference ({relation})', n, f'Observed {r1 - r2}, predicted {difference}.')

	return GenusMateRecord(int(n), r1, r2, relation, difference)



def genus_mate_inequalities(limit, jobs=1, verbose=False):
	"""Checks the comparison of the genus mates (1,3,36) and (3,4,9).

	Parameters
	----------
	limit : int
		All arguments n <= limit are checked.
	jobs : int, optional
		Number of worker processes for the theta series. Default is 1.
	verbose : bool, optional
		Prints one line per clause if ``True``. Default is ``False``.

	Returns
	-------
	dict[str, list[int]]
		The failing arguments per clause. The clauses are

		- ``non_square_equality``: equal counts at non-squares
		- ``square_difference``: the difference at m^2 (the argument listed is m)
		- ``nine_square_equality``: equal counts at 9m^2
		- ``dominance``: r(3,4,9) >= r(1,3,36) off the squares (6j+1)^2, (6j+2)^2
		- ``residue_1_squares``: at (6j+1)^2, r(1,3,36) > r(3,4,9) >= 0 with
		  equality on the right iff all primes dividing 6j+1 are 1 mod 3
		- ``residue_2_squares``: at (6j+2)^2, r(1,3,36) > r(3,4,9) > 0
		- ``residue_4_squares`` and ``residue_5_squares``: at (6j+4)^2 and
		  (6j+5)^2, r(3,4,9) > r(1,3,36) > 0

		For the residue clauses the listed argument is the root 6j+r.
	"""

	_check_truncation('thetaforms.classifier.genus_mate_inequalities', limit, 1)

	r1 = theta_series(catalog_form('F_1_3_36').form, limit, jobs).to_list()
	r2 = theta_series(catalog_form('F_3_4_9').form, limit, jobs).to_list()

	failures = {key : [] for key in ('non_square_equality', 'square_difference', 'nine_square_equality', 'dominance',
									 'residue_1_squares', 'residue_2_squares', 'residue_4_squares', 'residue_5_squares')}

	for n in range(1, limit + 1):
		relation, difference = _expected_genus_difference(n)
		root = isqrt(n)
		if relation == 'NON_SQUARE' and r1[n] != r2[n]:
			failures['non_square_equality'].append(n)
		if relation == 'SQUARE' and r1[n] - r2[n] != difference:
			failures['square_difference'].append(root)
		if relation == 'NINE_SQUARE' and r1[n] != r2[n]:
			failures['nine_square_equality'].append(n)
		if not (relation != 'NON_SQUARE' and root % 6 in (1, 2)) and r2[n] < r1[n]:
			failures['dominance'].append(n)

	for root in range(1, isqrt(limit) + 1):
		n = root*root
		residue = root % 6
		if residue == 1:
			zero_predicted = equality_class('W_MOD3', root)
			if not (r1[n] > r2[n] >= 0 and (r2[n] == 0) == zero_predicted):
				failures['residue_1_squares'].append(root)
		elif residue == 2:
			if not r1[n] > r2[n] > 0:
				failures['residue_2_squares'].append(root)
		elif residue in (4, 5):
			if not r2[n] > r1[n] > 0:
				failures[f'residue_{residue}_squares'].append(root)

	if verbose:
		for key, failed in failures.items():
			print(f'Genus mates {key:>22} --- n <= {limit} --- failures: {len(failed)}')

	return failures



_RESTRICTED = {
	'B10' : (TernaryForm(1, 1, 1), 8, 1, 'M_MOD4', -4, 48, 8, 6),
	'B20' : (TernaryForm(1, 1, 2), 8, 1, 'E_MOD8', -2, 16, 4, 4),
	'B30' : (TernaryForm(1, 1, 3), 24, 1, 'W_MOD3', -3, 48, 12, 4),
}



def restricted_theorem_check(preset, limit, jobs=1, verbose=False):
	"""Checks the restricted sums B10, B20 and B30 against the full forms.

	For B10 and B20 every exponent e = 8n+1, for B30 every exponent
	e = 24n+1, between 9 (resp. 25) and ``limit`` is considered. With r(e)
	the representation number of e by x^2+y^2+z^2, x^2+y^2+2z^2 or
	x^2+y^2+3z^2 and c(e) the coefficient of the restricted sum:

	- c(e) >= 0,
	- c(e) = 0 iff e = M^2 with all primes dividing M in the class
	  M_MOD4, E_MOD8 or W_MOD3 respectively,
	- for non-square e: 48 c(e) = r(e), 16 c(e) = r(e) and 48 c(e) = r(e),
	- for e = M^2: 8 c(e) = r(e)/6 - (-1/M) M, 4 c(e) = r(e)/4 - (-2/M) M
	  and 12 c(e) = r(e)/4 - (-3/M) M.

	Parameters
	----------
	preset : str
		``'B10'``, ``'B20'`` or ``'B30'``.
	limit : int
		The largest exponent.
	jobs : int, optional
		Number of worker processes. Default is 1.
	verbose : bool, optional
		Prints one line per clause if ``True``. Default is ``False``.

	Returns
	-------
	dict[str, list[int]]
		The failing exponents for the clauses ``nonnegative``,
		``zero_iff_square_class`` and ``value_relation``.
	"""

	key = str(preset).upper()
	if key not in _RESTRICTED:
		raise InputError('thetaforms.classifier.restricted_theorem_check', 'preset', 'Has to be one of B10, B20 or B30.')
	_check_truncation('thetaforms.classifier.restricted_theorem_check', limit, 1)

	form, step, offset, kind, character, square_free_factor, square_factor, square_norm = _RESTRICTED[key]
	restricted = restricted_preset(key, limit, jobs).to_list()
	full = theta_series(form, limit, jobs).to_list()

	failures = {'nonnegative' : [], 'zero_iff_square_class' : [], 'value_relation' : []}
	for e in range(step + offset, limit + 1, step):
		c = restricted[e]
		root = isqrt(e)
		is_square = root*root == e
		in_class = is_square and equality_class(kind, root)

		if c < 0:
			failures['nonnegative'].append(e)
		if (c == 0) != in_class:
			failures['zero_iff_square_class'].append(e)
		if is_square:
			if square_factor*c*square_norm != full[e] - square_norm*kronecker(character, root)*root:
				failures['value_relation'].append(e)
		elif square_free_factor*c != full[e]:
			failures['value_relation'].append(e)

	if verbose:
		for clause, failed in failures.items():
			print(f'Restricted sum {key} {clause:>22} --- e <= {limit} --- failures: {len(failed)}')

	return failures



def gauss_eureka_check(limit, jobs=1):
	"""Checks that every 8n+3 is a sum of three odd squares.

	Parameters
	----------
	limit : int
		The largest argument.
	jobs : int, optional
		Number of worker processes. Default is 1.

	Returns
	-------
	dict[str, list[int]]
		Failing arguments for ``positive`` (the odd-cube sum has a positive
		coefficient) and ``equals_full_count`` (all representations of 8n+3
		by x^2+y^2+z^2 use odd squares only).
	"""

	_check_truncation('thetaforms.classifier.gauss_eureka_check', limit, 1)

	odd = restricted_preset('G0', limit, jobs).to_list()
	full = theta_series(TernaryForm(1, 1, 1), limit, jobs).to_list()

	failures = {'positive' : [], 'equals_full_count' : []}
	for e in range(3, limit + 1, 8):
		if odd[e] <= 0:
			failures['positive'].append(e)
		if odd[e] != full[e]:
			failures['equals_full_count'].append(e)

	return failures



def kaplansky_identity_check(limit_even=20000, limit_odd=10000, jobs=1):
	"""Checks r(1,1,2; 2n) = r(1,1,1; n) and 3 r(1,1,2; 2n+1) = r(1,1,1; 4n+2).

	Parameters
	----------
	limit_even : int, optional
		The first identity is checked for n <= limit_even. Default is 20000.
	limit_odd : int, optional
		The second identity is checked for n <= limit_odd. Default is 10000.
	jobs : int, optional
		Number of worker processes. Default is 1.

	Returns
	-------
	dict[str, list[int]]
		The failing n for ``even_argument`` and ``odd_argument``.
	"""

	_check_truncation('thetaforms.classifier.kaplansky_identity_check', limit_even)
	_check_truncation('thetaforms.classifier.kaplansky_identity_check', limit_odd)

	r112 = theta_series(TernaryForm(1, 1, 2), max(2*limit_even, 2*limit_odd + 1), jobs).to_list()
	r111 = theta_series(TernaryForm(1, 1, 1), max(limit_even, 4*limit_odd + 2), jobs).to_list()

	return {
		'even_argument' : [n for n in range(limit_even + 1) if r112[2*n] != r111[n]],
		'odd_argument' : [n for n in range(limit_odd + 1) if 3*r112[2*n + 1] != r111[4*n + 2]],
	}



def _psi_product(shift_by, k1, k2, N):
	"""The series q^shift_by psi(q^k1) psi(q^k2)^2 truncated at q^N."""

	return shift(mul(psi(k1, N), mul(psi(k2, N), psi(k2, N))), shift_by)



def jp_lemma_check(form_id, limit, jobs=1, verbose=False):
	"""Checks the residue class structure of the theta series of JP1 or JP2.

	Parameters
	----------
	form_id : str
		``'JP1'`` for (9,16,36,16,4,8) or ``'JP2'`` for (9,17,32,-8,8,6).
	limit : int
		The largest argument of the form.
	jobs : int, optional
		Number of worker processes. Default is 1.
	verbose : bool, optional
		Prints one line per clause if ``True``. Default is ``False``.

	Returns
	-------
	dict[str, list[int]]
		The failing arguments of the form per clause. For JP1 (r is its
		representation number, r3 that of x^2+y^2+z^2):

		- ``multiples_of_64``: r(64n) = r3(n), zero iff n = 4^a(8m+7)
		- ``residue_16_mod_64``: 3 r(64n+16) = r3(4n+1) > 0
		- ``residue_4_mod_32``: r(32n+4) is 8 times the coefficient of
		  q^36 psi(q^32) psi(q^128)^2
		- ``residue_1_mod_8``: r(8n+1) is 2 times the coefficient of
		  q^9 psi(q^8) psi(q^32)^2
		- ``odd_residues_vanish``: r(8n+3) = r(8n+5) = r(8n+7) = 0
		- ``vanishing_residues_mod_64``: r(64n+2t) = 0 for t not in
		  {0, 2, 8, 18}

		For JP2 (r118 that of x^2+y^2+8z^2):

		- ``multiples_of_32``: r(32n) = r118(n), zero iff (1,1,8) excludes n
		- ``residue_20_mod_32``: 12 r(32n+20) = r3(8n+5)
		- ``residue_80_mod_128``: 3 r(128n+80) = r3(8n+5)
		- ``residue_16_mod_128``: r(128n+16) is 16 times the coefficient of
		  q^144 psi(q^128) psi(q^512)^2
		- ``residue_4_mod_32``, ``residue_1_mod_8`` and
		  ``odd_residues_vanish`` as above, with factors 4, 2
		- ``vanishing_residues_mod_64``: t not in {0, 2, 8, 10, 16, 18, 26}
	"""

	entry = catalog_form(form_id)
	if entry.id not in ('JP1', 'JP2'):
		raise InputError('thetaforms.classifier.jp_lemma_check', 'form_id', 'Has to be JP1 or JP2.')
	_check_truncation('thetaforms.classifier.jp_lemma_check', limit, 1)

	r = theta_series(entry.form, limit, jobs).to_list()
	r3 = theta_series(TernaryForm(1, 1, 1), limit, jobs).to_list()
	residue_1 = _psi_product(9, 8, 32, limit).to_list()
	residue_4 = _psi_product(36, 32, 128, limit).to_list()

	failures = {}

	def clause(name, arguments, holds):
		failures[name] = [n for n in arguments if not holds(n)]

	if entry.id == 'JP1':
		clause('multiples_of_64', range(0, limit + 1, 64),
			   lambda n: r[n] == r3[n // 64] and (n == 0 or (r[n] == 0) == (_d111(n // 64) is not None)))
		clause('residue_16_mod_64', range(16, limit + 1, 64),
			   lambda n: 3*r[n] == r3[4*((n - 16) // 64) + 1] and r[n] > 0)
		clause('residue_4_mod_32', range(4, limit + 1, 32), lambda n: r[n] == 8*residue_4[n])
		vanishing = {0, 2, 8, 18}
	else:
		r118 = theta_series(TernaryForm(1, 1, 8), limit // 32 + 1, jobs).to_list()
		residue_16 = _psi_product(144, 128, 512, limit).to_list()
		clause('multiples_of_32', range(0, limit + 1, 32),
			   lambda n: r[n] == r118[n // 32] and (n == 0 or (r[n] == 0) == (_d118(n // 32) is not None)))
		clause('residue_20_mod_32', range(20, limit + 1, 32), lambda n: 12*r[n] == r3[(n - 20) // 4 + 5] and r[n] > 0)
		clause('residue_80_mod_128', range(80, limit + 1, 128), lambda n: 3*r[n] == r3[(n - 80) // 16 + 5] and r[n] > 0)
		clause('residue_16_mod_128', range(16, limit + 1, 128), lambda n: r[n] == 16*residue_16[n])
		clause('residue_4_mod_32', range(4, limit + 1, 32), lambda n: r[n] == 4*residue_4[n])
		vanishing = {0, 2, 8, 10, 16, 18, 26}

	clause('residue_1_mod_8', range(1, limit + 1, 8), lambda n: r[n] == 2*residue_1[n])
	clause('odd_residues_vanish', [n for n in range(limit + 1) if n % 8 in (3, 5, 7)], lambda n: r[n] == 0)
	clause('vanishing_residues_mod_64', [n for n in range(limit + 1) if n % 2 == 0 and (n % 64) // 2 not in vanishing],
		   lambda n: r[n] == 0)

	if verbose:
		for name, failed in failures.items():
			print(f'Lemma {entry.id} {name:>26} --- n <= {limit} --- failures: {len(failed)}')

	return failures
