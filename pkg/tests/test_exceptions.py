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


"""Tests if thetaforms exceptions are being raised properly.

"""

import pytest

from thetaforms import QSeries, TernaryForm, theta_series, verification
from thetaforms._exceptions import (ClaimViolationError, CoefficientOverflowError, ConfigError, InputError,
									NotPositiveDefiniteError, ThetaFormsException)
from thetaforms.classifier import excluded
from thetaforms.series import pochhammer, reciprocal



def test_input_error():
	with pytest.raises(InputError):
		theta_series(TernaryForm(1, 1, 1), -1)

	with pytest.raises(ThetaFormsException):
		excluded('D111', 0)

	with pytest.raises(InputError):
		verification.verify('no-such-identity')

	assert 'parameter N' in str(InputError('thetaforms.series', 'N'))



def test_not_positive_definite_error():
	with pytest.raises(NotPositiveDefiniteError):
		theta_series(TernaryForm(1, 1, 1, 0, 0, 4), 10)

	with pytest.raises(InputError):
		theta_series(TernaryForm(1, -1, 1), 10)

	with pytest.raises(ThetaFormsException):
		theta_series(TernaryForm(0, 1, 1), 10)



def test_overflow_error():
	with pytest.raises(CoefficientOverflowError):
		reciprocal(pochhammer(1, 1, 1, 600))

	with pytest.raises(ThetaFormsException):
		QSeries([2**62]) * 4



def test_config_error():
	error = ConfigError('Defaults', 'trunc', 'Has to be an integer.')
	assert '[Defaults]' in str(error)

	with pytest.raises(ThetaFormsException):
		raise error



def test_claim_violation_error():
	error = ClaimViolationError('dominance', 49)
	assert str(error) == 'The claim dominance fails for the argument 49.'

	with pytest.raises(ThetaFormsException):
		raise ClaimViolationError('dominance', 49, 'Observed 2, predicted 0.')
