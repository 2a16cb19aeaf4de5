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


"""Tests for the identity registry and the verification harness.

"""

import pytest

from thetaforms import verification
from thetaforms._exceptions import InputError
from thetaforms.theta import phi, psi
from thetaforms.verification import IdentityCase, Mismatch, get_case, registered_names, run_case, verify, verify_all



names = registered_names()
fast = ['lucky', 'jtp-phi', 'c0', 'k1', 'eq-4-1', 'identity1-jp1']



def test_registry():
	assert len(names) >= 75
	assert names == sorted(names)
	for name in ['pent', 'qpi', 'scqpi', 'eq-1-17', 'step2-from-step1', 'jpeg1', 'b30-restricted', 'identity2-jp2']:
		assert name in names

	assert get_case('Identity2_JP1').name == 'identity2-jp1'
	assert get_case('qpi').is_check
	assert get_case('scqpi').default_N == 6000

	with pytest.raises(InputError):
		get_case('no-such-identity')
	with pytest.raises(InputError):
		verification.register(IdentityCase('lucky', lambda N: None))



def test_single_identities():
	report = verify('lucky', 500)
	assert report.passed
	assert report.trunc == 500
	assert report.first_mismatch is None

	assert verify('identity2_jp1', 2000).passed
	assert verify('identity3-jp1', 2000).passed
	assert verify('qpi').trunc == 500
	assert verify('identity1-jp2').passed



def test_failing_identity():
	doubled = IdentityCase('doubled-phi', lambda N: (phi(1, N), 2*phi(1, N) + psi(1, N)))
	report = run_case(doubled, 100, timing=False)

	assert not report.passed
	assert report.status == 'FAIL'
	assert report.first_mismatch == Mismatch(0, 1, 3)
	assert report.to_dict() == {'identity' : 'doubled-phi', 'trunc' : 100, 'status' : 'FAIL',
								'first_mismatch' : {'degree' : 0, 'lhs' : 1, 'rhs' : 3}, 'ms' : 0}



def test_sparse_warning():
	square = IdentityCase('square-phi', lambda N: (phi(1, N), phi(1, N)))
	with pytest.warns(UserWarning):
		assert run_case(square, 100).passed



def test_check_mismatch():
	assert Mismatch(3, 1, 0, z_exponent=-2).to_dict() == {'degree' : 3, 'lhs' : 1, 'rhs' : 0, 'z_exponent' : -2}

	broken = IdentityCase('broken-check', lambda N: Mismatch(N, 0, 1), is_check=True)
	report = run_case(broken, 7)
	assert report.first_mismatch.degree == 7



def test_verify_all():
	reports = verify_all()
	failed = [report.name for report in reports if not report.passed]
	assert failed == []
	assert [report.name for report in reports] == names



def test_timing_and_jobs():
	serial = verify_all(N=400, names=fast, timing=False)
	parallel = verify_all(N=400, jobs=2, names=fast, timing=False)

	assert all(report.ms == 0 for report in serial)
	assert [report.to_dict() for report in serial] == [report.to_dict() for report in parallel]
	assert [report.name for report in serial] == sorted(fast)

	with pytest.raises(InputError):
		verify_all(jobs=0)



def test_verbose(capsys):
	verify_all(N=200, names=['lucky', 'c0'], verbose=True, timing=False)
	out, err = capsys.readouterr()
	assert 'lucky' in out
	assert 'Statistics' in out
	assert 'Failed: 0' in out
