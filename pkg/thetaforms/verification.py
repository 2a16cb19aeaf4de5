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

"""Registry and harness for coefficient-exact identity checks.

Identities are registered with the :py:func:`identity` decorator. The
decorated function takes the truncation order N and returns the two sides
as :py:class:`QSeries <thetaforms.series.QSeries>`. Identities that are not
a comparison of two series (the quintuple product in two variables, or a
polynomial identity on a grid of points) are registered with
:py:func:`identity_check` and return a :py:class:`Mismatch` or ``None``.

The catalog itself lives in :py:mod:`thetaforms._identities` and is
imported on first use.
"""

import concurrent.futures
import dataclasses
import time
import warnings

from ._exceptions import InputError
from .series import first_mismatch
from .utils import _check_truncation



# fewer non-zero coefficients than this on either side triggers a warning
SPARSE_THRESHOLD = 25



@dataclasses.dataclass(frozen=True)
class Mismatch:
	"""The first coefficient where the two sides of an identity differ.

	"""

	degree: int
	lhs: int
	rhs: int
	z_exponent: int = None

	def to_dict(self):
		result = {'degree' : self.degree, 'lhs' : self.lhs, 'rhs' : self.rhs}
		if self.z_exponent is not None:
			result['z_exponent'] = self.z_exponent
		return result



@dataclasses.dataclass(frozen=True)
class Report:
	"""Outcome of a single identity check.

	Attributes
	----------
	name : str
		The registry name.
	trunc : int
		The truncation order that was used.
	status : str
		``'PASS'`` or ``'FAIL'``.
	first_mismatch : Mismatch or None
		Present exactly for a failure.
	ms : int
		Elapsed wall time in milliseconds, 0 if timing was switched off.
	"""

	name: str
	trunc: int
	status: str
	first_mismatch: Mismatch
	ms: int

	@property
	def passed(self):
		return self.status == 'PASS'

	def to_dict(self):
		"""Converts the report to the JSON record of the command line interface.

		Returns
		-------
		dict
			Keys ``identity``, ``trunc``, ``status``, ``first_mismatch`` and
			``ms``.
		"""

		mismatch = None if self.first_mismatch is None else self.first_mismatch.to_dict()
		return {'identity' : self.name, 'trunc' : self.trunc, 'status' : self.status,
				'first_mismatch' : mismatch, 'ms' : self.ms}



@dataclasses.dataclass(frozen=True)
class IdentityCase:
	"""A registered identity.

	Attributes
	----------
	name : str
		Unique kebab-case name.
	build : callable
		For a series identity, maps N to the pair (lhs, rhs). For a check,
		maps N to a :py:class:`Mismatch` or ``None``.
	default_N : int
		Truncation order used when none is requested.
	reference : str
		Short human-readable statement of the identity.
	is_check : bool
		Whether ``build`` is a check rather than a pair of sides.
	"""

	name: str
	build: object
	default_N: int = 1000
	reference: str = ''
	is_check: bool = False



_REGISTRY = {}
_CATALOG_LOADED = False



def _normalize(name):
	return str(name).strip().lower().replace('_', '-')



def register(case):
	"""Adds an identity case to the registry.

	Parameters
	----------
	case : IdentityCase
		The case. Its name must not be registered yet.

	Returns
	-------
	IdentityCase
		The registered case.
	"""

	name = _normalize(case.name)
	if name in _REGISTRY:
		raise InputError('thetaforms.verification.register', 'case', f'The identity {name} is already registered.')
	_check_truncation('thetaforms.verification.register', case.default_N, 1)

	case = dataclasses.replace(case, name=name)
	_REGISTRY[name] = case
	return case



def identity(name, default_N=1000, reference=''):
	"""Decorator registering a function N -> (lhs, rhs) as an identity.

	Parameters
	----------
	name : str
		The registry name.
	default_N : int, optional
		Default truncation order. Default is 1000.
	reference : str, optional
		Statement of the identity. Default is ``''``.

	Returns
	-------
	callable
		The decorator, which returns the function unchanged.
	"""

	def decorator(function):
		register(IdentityCase(name, function, default_N, reference))
		return function

	return decorator



def identity_check(name, default_N=1000, reference=''):
	"""Decorator registering a function N -> Mismatch or None as an identity.

	See :py:func:`identity` for the parameters.
	"""

	def decorator(function):
		register(IdentityCase(name, function, default_N, reference, is_check=True))
		return function

	return decorator



def _registry():
	global _CATALOG_LOADED
	if not _CATALOG_LOADED:
		_CATALOG_LOADED = True
		from . import _identities  # noqa: F401
	return _REGISTRY



def registered_names():
	"""Returns the names of all registered identities in sorted order."""

	return sorted(_registry())



def get_case(name):
	"""Looks up a registered identity.

	Parameters
	----------
	name : str
		The registry name. Underscores are accepted in place of hyphens and
		case is ignored.

	Returns
	-------
	IdentityCase
		The case.
	"""

	registry = _registry()
	key = _normalize(name)
	if key not in registry:
		raise InputError('thetaforms.verification.get_case', 'name', f'Unknown identity {name}. Use registered_names() for a list.')
	return registry[key]



def run_case(case, N=None, timing=True):
	"""Checks a single identity case.

	The case does not have to be registered.

	Parameters
	----------
	case : IdentityCase
		The identity.
	N : int or None, optional
		The truncation order. If this is ``None``, the default of the case
		is used. Default is ``None``.
	timing : bool, optional
		If ``False``, the report carries 0 milliseconds. Default is ``True``.

	Returns
	-------
	Report
		The outcome.
	"""

	if N is None:
		N = case.default_N
	_check_truncation('thetaforms.verification.run_case', N, 1)

	start = time.perf_counter()
	if case.is_check:
		mismatch = case.build(N)
	else:
		lhs, rhs = case.build(N)
		sparse = min(lhs.nonzero_count(), rhs.nonzero_count())
		if sparse < SPARSE_THRESHOLD:
			warnings.warn(f'Identity {case.name} has only {sparse} non-zero coefficients up to q^{N}, the check is nearly vacuous.')
		found = first_mismatch(lhs, rhs)
		mismatch = None if found is None else Mismatch(*found)
	elapsed = int(round(1000*(time.perf_counter() - start))) if timing else 0

	return Report(case.name, N, 'PASS' if mismatch is None else 'FAIL', mismatch, elapsed)



def verify(name, N=None, timing=True):
	"""Checks a registered identity coefficient by coefficient.

	Parameters
	----------
	name : str
		The registry name.
	N : int or None, optional
		The truncation order. If this is ``None``, the default of the
		identity is used. Default is ``None``.
	timing : bool, optional
		If ``False``, the report carries 0 milliseconds. Default is ``True``.

	Returns
	-------
	Report
		The outcome.

	Examples
	--------
	>>> verify('lucky', 500).status
	'PASS'
	"""

	return run_case(get_case(name), N, timing)



def verify_all(N=None, jobs=1, verbose=False, timing=True, names=None):
	"""Checks every registered identity.

	Parameters
	----------
	N : int or None, optional
		Common truncation order. If this is ``None``, every identity uses its
		default. Default is ``None``.
	jobs : int, optional
		Number of worker processes. Default is 1.
	verbose : bool, optional
		Prints one line per identity and a closing summary. Default is
		``False``.
	timing : bool, optional
		If ``False``, all reports carry 0 milliseconds. Default is ``True``.
	names : list[str] or None, optional
		Restricts the run to these identities. Default is ``None``.

	Returns
	-------
	list[Report]
		The reports, sorted by name.
	"""

	if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
		raise InputError('thetaforms.verification.verify_all', 'jobs', 'The number of workers has to be a positive integer.')
	if N is not None:
		_check_truncation('thetaforms.verification.verify_all', N, 1)

	if names is None:
		selected = registered_names()
	else:
		selected = sorted({get_case(name).name for name in names})

	start = time.perf_counter()
	if jobs == 1:
		reports = [verify(name, N, timing) for name in selected]
	else:
		with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
			reports = list(executor.map(verify, selected, [N]*len(selected), [timing]*len(selected)))
	reports.sort(key=lambda report: report.name)

	if verbose:
		for report in reports:
			line = f'Identity {report.name:>18} --- trunc: {report.trunc:6d} --- {report.status}'
			if timing:
				line += f' --- {report.ms:6d} ms'
			if report.first_mismatch is not None:
				line += f' --- first mismatch: {report.first_mismatch.to_dict()}'
			print(line)
		failed = sum(1 for report in reports if not report.passed)
		print(f'\nStatistics --- Identities checked: {len(reports)} --- Passed: {len(reports) - failed}'
			  f' --- Failed: {failed} --- {time.perf_counter() - start:.2f} s\n')

	return reports
