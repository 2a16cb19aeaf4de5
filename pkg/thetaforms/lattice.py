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

"""Representation numbers of positive binary and ternary quadratic forms.

The ternary form (a, b, c, d, e, f) stands for
ax^2 + by^2 + cz^2 + dyz + exz + fxy, the binary form (a, b, c) for
ax^2 + bxy + cy^2. Theta series are computed by enumerating all lattice
points in an exact bounding region: the outer variable ranges over an
interval obtained by completing the square with integers only, and for
every value of the outer variable the remaining pairs are evaluated as a
numpy grid and counted with :py:func:`numpy.bincount`.
"""

import dataclasses
import functools
import numbers
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ._exceptions import InputError, NotPositiveDefiniteError
from .series import QSeries
from .utils import _check_truncation, integer_interval, parse_int_tuple



@dataclasses.dataclass(frozen=True)
class TernaryForm:
	"""The ternary quadratic form ax^2 + by^2 + cz^2 + dyz + exz + fxy.

	"""

	a : int
	b : int
	c : int
	d : int = 0
	e : int = 0
	f : int = 0

	def __post_init__(self):
		for name in ('a', 'b', 'c', 'd', 'e', 'f'):
			value = getattr(self, name)
			if isinstance(value, bool) or not isinstance(value, numbers.Integral):
				raise InputError('thetaforms.lattice.TernaryForm', name, 'The coefficients have to be integers.')
			object.__setattr__(self, name, int(value))



	@classmethod
	def from_literal(cls, text):
		"""Parses a literal like ``"9,17,32,-8,8,6"``.

		Three entries are read as a diagonal form.
		"""

		return cls(*parse_int_tuple(text, (3, 6), 'thetaforms.lattice.TernaryForm.from_literal'))



	def __call__(self, x, y, z):
		return self.a*x*x + self.b*y*y + self.c*z*z + self.d*y*z + self.e*x*z + self.f*x*y



	def coefficients(self):
		"""Returns the tuple (a, b, c, d, e, f)."""

		return (self.a, self.b, self.c, self.d, self.e, self.f)



	def scaled(self, scales):
		"""Returns the form in the variables (s1 x, s2 y, s3 z)."""

		s1, s2, s3 = scales
		return TernaryForm(self.a*s1*s1, self.b*s2*s2, self.c*s3*s3, self.d*s2*s3, self.e*s1*s3, self.f*s1*s2)



	@property
	def discriminant(self):
		"""int : The discriminant 4abc + def - ad^2 - be^2 - cf^2."""

		return discriminant(self)



	def __str__(self):
		return '(' + ','.join(str(v) for v in self.coefficients()) + ')'



@dataclasses.dataclass(frozen=True)
class BinaryForm:
	"""The binary quadratic form ax^2 + bxy + cy^2.

	"""

	a : int
	b : int
	c : int

	def __post_init__(self):
		for name in ('a', 'b', 'c'):
			value = getattr(self, name)
			if isinstance(value, bool) or not isinstance(value, numbers.Integral):
				raise InputError('thetaforms.lattice.BinaryForm', name, 'The coefficients have to be integers.')
			object.__setattr__(self, name, int(value))



	def __call__(self, x, y):
		return self.a*x*x + self.b*x*y + self.c*y*y



	def is_positive_definite(self):
		"""Returns ``True`` iff a > 0 and 4ac - b^2 > 0."""

		return self.a > 0 and 4*self.a*self.c - self.b*self.b > 0



	def __str__(self):
		return f'({self.a},{self.b},{self.c})'



@dataclasses.dataclass(frozen=True)
class CongruenceSystem:
	"""Linear congruence conditions on the summation variables.

	Every constraint (u, v, w, m, r) demands u x + v y + w z = r (mod m).
	The scales (s1, s2, s3) replace the variables of the form by
	(s1 x, s2 y, s3 z), the congruences refer to the unscaled x, y, z.

	Examples
	--------
	The conditions x = 1 mod 4 and y = z mod 6 read ::

	    CongruenceSystem(((1, 0, 0, 4, 1), (0, 1, -1, 6, 0)))
	"""

	constraints : tuple = ()
	scales : tuple = (1, 1, 1)

	def __post_init__(self):
		constraints = tuple(tuple(int(v) for v in constraint) for constraint in self.constraints)
		for constraint in constraints:
			if len(constraint) != 5:
				raise InputError('thetaforms.lattice.CongruenceSystem', 'constraints', 'Every constraint has to consist of (u, v, w, m, r).')
			m, r = constraint[3], constraint[4]
			if m < 1:
				raise InputError('thetaforms.lattice.CongruenceSystem', 'constraints', f'The modulus of {constraint} has to be positive.')
			if not 0 <= r < m:
				raise InputError('thetaforms.lattice.CongruenceSystem', 'constraints', f'The residue of {constraint} has to lie between 0 and m - 1.')

		scales = tuple(int(s) for s in self.scales)
		if len(scales) != 3 or any(s < 1 for s in scales):
			raise InputError('thetaforms.lattice.CongruenceSystem', 'scales', 'There have to be three positive scale factors.')

		object.__setattr__(self, 'constraints', constraints)
		object.__setattr__(self, 'scales', scales)



	def contains(self, x, y, z):
		"""Checks all congruences for a single triple."""

		return all((u*x + v*y + w*z - r) % m == 0 for u, v, w, m, r in self.constraints)



def discriminant(form):
	"""Computes the discriminant of a ternary form.

	Parameters
	----------
	form : TernaryForm
		The form (a, b, c, d, e, f).

	Returns
	-------
	int
		4abc + def - ad^2 - be^2 - cf^2.
	"""

	a, b, c, d, e, f = form.coefficients()
	return 4*a*b*c + d*e*f - a*d*d - b*e*e - c*f*f



def is_positive_definite(form):
	"""Decides positive definiteness of a ternary form.

	The leading principal minors of twice the Gram matrix are 2a,
	4ab - f^2 and 2 times the discriminant.

	Parameters
	----------
	form : TernaryForm
		The form.

	Returns
	-------
	bool
		``True`` if and only if all three minors are positive.
	"""

	return form.a > 0 and 4*form.a*form.b - form.f*form.f > 0 and discriminant(form) > 0



def _require_positive_definite(obj, form):
	if not is_positive_definite(form):
		raise NotPositiveDefiniteError(obj, form)



def enumeration_box(form, N):
	"""Computes the exact bounding box of the ellipsoid form <= N.

	Parameters
	----------
	form : TernaryForm
		A positive definite form.
	N : int
		The bound for the form value.

	Returns
	-------
	tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
		Closed integer ranges for x, y and z. Every integer triple with
		form value at most N lies inside.
	"""

	_require_positive_definite('thetaforms.lattice.enumeration_box', form)
	_check_truncation('thetaforms.lattice.enumeration_box', N)

	a, b, c, d, e, f = form.coefficients()
	delta = discriminant(form)

	return (integer_interval(delta, 0, -N*(4*b*c - d*d)),
			integer_interval(delta, 0, -N*(4*a*c - e*e)),
			integer_interval(delta, 0, -N*(4*a*b - f*f)))



def _enumerate_chunk(coefficients, constraints, N, xs):
	"""Counts the lattice points with form value <= N for the given x.

	Parameters
	----------
	coefficients : tuple[int]
		The (already scaled) form coefficients (a, b, c, d, e, f).
	constraints : tuple[tuple[int]]
		The congruences (u, v, w, m, r).
	N : int
		The bound.
	xs : list[int]
		The values of the outer variable.

	Returns
	-------
	numpy.ndarray
		The counts for the values 0, ..., N.
	"""

	a, b, c, d, e, f = coefficients
	counts = np.zeros(N + 1, dtype=np.int64)

	for x in xs:
		y_range = integer_interval(4*b*c - d*d, (4*c*f - 2*d*e)*x, (4*a*c - e*e)*x*x - 4*c*N)
		z_range = integer_interval(4*b*c - d*d, (4*b*e - 2*d*f)*x, (4*a*b - f*f)*x*x - 4*b*N)
		if y_range is None or z_range is None:
			continue

		y, z = np.meshgrid(np.arange(y_range[0], y_range[1] + 1, dtype=np.int64),
						   np.arange(z_range[0], z_range[1] + 1, dtype=np.int64), indexing='ij')
		values = a*x*x + b*y*y + c*z*z + d*y*z + e*x*z + f*x*y
		mask = values <= N
		for u, v, w, m, r in constraints:
			mask &= (u*x + v*y + w*z - r) % m == 0

		counts += np.bincount(values[mask], minlength=N + 1)

	return counts



def _count_points(form, system, N, jobs, obj):
	_check_truncation(obj, N)
	if isinstance(jobs, bool) or not isinstance(jobs, numbers.Integral) or jobs < 1:
		raise InputError(obj, 'jobs', 'The number of workers has to be a positive integer.')

	scaled = form.scaled(system.scales)
	_require_positive_definite(obj, scaled)

	x_range = enumeration_box(scaled, N)[0]
	xs = list(range(x_range[0], x_range[1] + 1))
	# congruences in x alone are applied before the enumeration
	for u, v, w, m, r in system.constraints:
		if v == 0 and w == 0:
			xs = [x for x in xs if (u*x - r) % m == 0]

	coefficients = scaled.coefficients()
	if jobs == 1 or len(xs) < 2:
		counts = _enumerate_chunk(coefficients, system.constraints, N, xs)
	else:
		chunks = [xs[i::jobs] for i in range(jobs) if xs[i::jobs]]
		with ProcessPoolExecutor(max_workers=len(chunks)) as executor:
			results = executor.map(_enumerate_chunk, [coefficients]*len(chunks), [system.constraints]*len(chunks),
								   [N]*len(chunks), chunks)
			counts = np.zeros(N + 1, dtype=np.int64)
			for partial in results:
				counts += partial

	return QSeries(counts, N)



def theta_series(form, N, jobs=1):
	"""Computes the theta series of a positive ternary form.

	Parameters
	----------
	form : TernaryForm
		A positive definite form.
	N : int
		The truncation order.
	jobs : int, optional
		Number of worker processes the outer variable is split across.
		Default is 1.

	Returns
	-------
	QSeries
		The series whose coefficient of q^n is the number of integer
		triples (x, y, z) with form value n.

	Raises
	------
	NotPositiveDefiniteError
		If the form is not positive definite.
	"""

	return _count_points(form, CongruenceSystem(), N, jobs, 'thetaforms.lattice.theta_series')



# smallest truncation order kept by rep_count
_CACHED_MIN_TRUNC = 64



@functools.lru_cache(maxsize=32)
def _cached_theta(form, N):
	return theta_series(form, N)



def rep_count(form, n):
	"""Returns the number of representations of n by the form.

	Negative n have no representations. The theta series is enumerated up to
	the next power of two that is at least n and kept per form, so repeated
	calls for growing n share the enumeration.
	"""

	_require_positive_definite('thetaforms.lattice.rep_count', form)
	if n < 0:
		return 0

	N = _CACHED_MIN_TRUNC
	while N < n:
		N *= 2

	return _cached_theta(form, N).coefficient(n)



def restricted_theta(form, scales, constraints, N, jobs=1):
	"""Computes a theta sum restricted by linear congruences.

	Parameters
	----------
	form : TernaryForm
		The form, evaluated at (s1 x, s2 y, s3 z).
	scales : tuple[int] or None
		The scale factors (s1, s2, s3). If this is ``None``, the scales of
		``constraints`` are used.
	constraints : CongruenceSystem or list[tuple[int]]
		The congruences the summation variables have to satisfy.
	N : int
		The truncation order.
	jobs : int, optional
		Number of worker processes. Default is 1.

	Returns
	-------
	QSeries
		The sum of q^form(s1 x, s2 y, s3 z) over all admissible triples,
		truncated at q^N.

	Examples
	--------
	The sum over x = 1 mod 4, y = 2 mod 8 and z = 2 mod 8 of
	q^(x^2 + y^2 + z^2) is ::

	    restricted_theta(TernaryForm(1, 1, 1), (1, 1, 1),
	                     [(1, 0, 0, 4, 1), (0, 1, 0, 8, 2), (0, 0, 1, 8, 2)], N)
	"""

	if isinstance(constraints, CongruenceSystem):
		system = constraints
		if scales is not None:
			system = CongruenceSystem(system.constraints, scales)
	else:
		system = CongruenceSystem(tuple(constraints), scales if scales is not None else (1, 1, 1))

	return _count_points(form, system, N, jobs, 'thetaforms.lattice.restricted_theta')



JP1 = TernaryForm(9, 16, 36, 16, 4, 8)
JP2 = TernaryForm(9, 17, 32, -8, 8, 6)

PRESETS = {
	'B10' : (TernaryForm(1, 1, 1), CongruenceSystem(((1, 0, 0, 4, 1), (0, 1, 0, 8, 2), (0, 0, 1, 8, 2)))),
	'B20' : (TernaryForm(1, 1, 2), CongruenceSystem(((1, 0, 0, 4, 1), (0, 1, 0, 16, 4), (0, 0, 1, 2, 0)))),
	'B30' : (TernaryForm(1, 1, 3), CongruenceSystem(((1, 0, 0, 12, 3), (0, 1, -1, 6, 0), (0, 1, 1, 6, 2)), (1, 2, 2))),
	'G0' : (TernaryForm(1, 1, 1), CongruenceSystem(((1, 0, 0, 2, 1), (0, 1, 0, 2, 1), (0, 0, 1, 2, 1)))),
	'JP1_EVEN' : (JP1, CongruenceSystem(((1, 0, 0, 2, 0),))),
	'JP1_ODD' : (JP1, CongruenceSystem(((1, 0, 0, 2, 1),))),
	'JP1_EVEN_SAME' : (JP1, CongruenceSystem(((1, 0, -2, 4, 0),))),
	'JP1_EVEN_MIXED' : (JP1, CongruenceSystem(((1, 0, -2, 4, 2),))),
}



def restricted_preset(name, N, jobs=1):
	"""Evaluates one of the named restricted sums in :py:data:`PRESETS`.

	Parameters
	----------
	name : str
		The preset, e.g. ``'B10'`` (case insensitive).
	N : int
		The truncation order.
	jobs : int, optional
		Number of worker processes. Default is 1.

	Returns
	-------
	QSeries
		The restricted sum truncated at q^N.
	"""

	key = str(name).upper()
	if key not in PRESETS:
		raise InputError('thetaforms.lattice.restricted_preset', 'name', f'Unknown preset {name}. Choose one of {", ".join(PRESETS)}.')

	form, system = PRESETS[key]
	return restricted_theta(form, None, system, N, jobs)



def binary_lattice_sum(a, b, c, d, e, N):
	"""Sums q^(ax^2 + bxy + cy^2 + dx + ey) over all integer pairs.

	Parameters
	----------
	a, b, c : int
		The quadratic part, which has to be positive definite.
	d, e : int
		The linear part.
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The sum over all pairs with value between 0 and N. Negative values,
		which only occur for some inhomogeneous forms, are not counted.
	"""

	_check_truncation('thetaforms.lattice.binary_lattice_sum', N)
	if not (a > 0 and 4*a*c - b*b > 0):
		raise NotPositiveDefiniteError('thetaforms.lattice.binary_lattice_sum', BinaryForm(a, b, c))

	counts = np.zeros(N + 1, dtype=np.int64)
	x_range = integer_interval(4*a*c - b*b, 4*c*d - 2*b*e, -e*e - 4*c*N)
	if x_range is None:
		return QSeries(counts, N)

	for x in range(x_range[0], x_range[1] + 1):
		y_range = integer_interval(c, b*x + e, a*x*x + d*x - N)
		if y_range is None:
			continue
		y = np.arange(y_range[0], y_range[1] + 1, dtype=np.int64)
		values = a*x*x + b*x*y + c*y*y + d*x + e*y
		values = values[values >= 0]
		counts += np.bincount(values, minlength=N + 1)[:N + 1]

	return QSeries(counts, N)



def binary_theta(bf, N):
	"""Computes the theta series of a positive definite binary form.

	Parameters
	----------
	bf : BinaryForm
		The form (a, b, c).
	N : int
		The truncation order.

	Returns
	-------
	QSeries
		The sum of q^(ax^2 + bxy + cy^2) over all integer pairs.
	"""

	if not bf.is_positive_definite():
		raise NotPositiveDefiniteError('thetaforms.lattice.binary_theta', bf)

	return binary_lattice_sum(bf.a, bf.b, bf.c, 0, 0, N)



def apply_unimodular(bf, M):
	"""Applies the substitution x -> m11 x + m12 y, y -> m21 x + m22 y.

	Parameters
	----------
	bf : BinaryForm
		The form.
	M : array_like
		The integer matrix ((m11, m12), (m21, m22)) with determinant 1 or -1.

	Returns
	-------
	BinaryForm
		The transformed form. It has the same theta series as ``bf``.

	Examples
	--------
	The substitution x -> y, y -> -x - 6y turns (72, 12, 1) into
	(1, 0, 36) ::

	    apply_unimodular(BinaryForm(72, 12, 1), ((0, 1), (-1, -6)))
	"""

	try:
		(m11, m12), (m21, m22) = [[int(v) for v in row] for row in M]
	except (TypeError, ValueError):
		raise InputError('thetaforms.lattice.apply_unimodular', 'M', 'The substitution has to be a 2x2 integer matrix.')

	if abs(m11*m22 - m12*m21) != 1:
		raise InputError('thetaforms.lattice.apply_unimodular', 'M', 'The determinant of the substitution has to be 1 or -1.')

	a = bf(m11, m21)
	c = bf(m12, m22)
	b = 2*bf.a*m11*m12 + bf.b*(m11*m22 + m12*m21) + 2*bf.c*m21*m22

	return BinaryForm(a, b, c)
