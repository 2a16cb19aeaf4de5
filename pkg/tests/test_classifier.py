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


"""Tests for the excluded sets and the arithmetic checks.

"""

import pytest

from thetaforms._exceptions import ClaimViolationError, InputError
from thetaforms.classifier import (ExclusionVerdict, catalog_form, catalog_ids, excluded, gauss_eureka_check,
								   genus_mate_compare, genus_mate_inequalities, jp_lemma_check, kaplansky_identity_check,
								   pow4res, register_catalog_form, restricted_theorem_check, scan_excluded)
from thetaforms.lattice import TernaryForm



def no_failures(failures):
	return all(len(failed) == 0 for failed in failures.values())



def test_pow4res():
	assert pow4res(7, 8, 7) == 0
	assert pow4res(28, 8, 7) == 1
	assert pow4res(7*16, 8, 7) == 2
	assert pow4res(7*16, 8, 7, amax=1) is None
	assert pow4res(5, 8, 7) is None
	assert pow4res(54, 9, 6, base=9) == 1



def test_verdicts():
	assert excluded('JP1', 25) == ExclusionVerdict(True, 'SQUARE_CLASS', '5^2')
	assert excluded('JP1', 100) == ExclusionVerdict(True, 'SQUARE_CLASS', '10^2')
	assert not excluded('JP1', 9).excluded
	assert excluded('D111', 7).reason == 'POW4_8M7'
	assert excluded('d111', 28).detail == '4^1(8m+7)'
	assert excluded('D111', 14) == ExclusionVerdict(False)
	assert excluded('JP2', 13).reason == 'CONGRUENCE'
	assert excluded('F_3_4_9', 1).reason == 'SQUARE_CLASS'
	assert not excluded('F_1_3_36', 1).excluded
	assert excluded('JP1', 25).to_dict() == {'excluded' : True, 'reason' : 'SQUARE_CLASS', 'detail' : '5^2'}

	with pytest.raises(InputError):
		excluded('JP3', 5)
	with pytest.raises(InputError):
		excluded('JP1', 0)



@pytest.mark.parametrize('form_id', catalog_ids())
def test_scans(form_id):
	assert scan_excluded(form_id, 50000) == []



def test_registration():
	@register_catalog_form('sum_1_1_5', TernaryForm(1, 1, 5))
	def _never(n):
		return None

	assert catalog_form('SUM_1_1_5').form == TernaryForm(1, 1, 5)
	assert not excluded('sum_1_1_5', 3).excluded
	# (1,1,5) does not represent 3
	assert scan_excluded('SUM_1_1_5', 10) == [3]



def test_genus_mates():
	record = genus_mate_compare(1)
	assert (record.r_1_3_36, record.r_3_4_9, record.relation, record.expected_difference) == (2, 0, 'SQUARE', 2)

	record = genus_mate_compare(4)
	assert (record.r_1_3_36, record.r_3_4_9, record.expected_difference) == (6, 2, 4)
	assert genus_mate_compare(25).expected_difference == -10
	assert genus_mate_compare(81).relation == 'NINE_SQUARE'
	assert genus_mate_compare(7).relation == 'NON_SQUARE'
	assert genus_mate_compare(49).to_dict()['n'] == 49

	assert no_failures(genus_mate_inequalities(20000))



@pytest.mark.parametrize('preset', ['B10', 'B20', 'B30'])
def test_restricted_theorems(preset):
	assert no_failures(restricted_theorem_check(preset, 20000))

	with pytest.raises(InputError):
		restricted_theorem_check('G0', 100)



def test_gauss_eureka():
	assert no_failures(gauss_eureka_check(40003))



def test_kaplansky_identities():
	assert no_failures(kaplansky_identity_check(20000, 10000))



@pytest.mark.parametrize('form_id', ['JP1', 'JP2'])
def test_lemmas(form_id):
	failures = jp_lemma_check(form_id, 20000)
	assert 'residue_1_mod_8' in failures
	assert no_failures(failures)

	with pytest.raises(InputError):
		jp_lemma_check('D111', 100)



def test_claim_violation():
	with pytest.raises(ClaimViolationError):
		raise ClaimViolationError('dominance', 49, 'test')
	with pytest.raises(InputError):
		genus_mate_compare(0)
