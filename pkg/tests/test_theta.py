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


"""Tests for the theta functions and Euler products.

"""

import pytest

from thetaforms._exceptions import InputError
from thetaforms.series import QSeries, alternate
from thetaforms.theta import (ThetaKind, borwein_a, borwein_c, char_square_series, classical, euler_E, eta_quotient,
							  jacobi_triple_product, phi, psi, series_sum, theta_f)



N = 1000



@pytest.mark.parametrize('kind', list(ThetaKind))
def test_sum_equals_product(kind):
	assert series_sum(kind, 1, N) == classical(kind, 1, N)



def test_dilation():
	assert phi(4, 20).to_list() == [1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0]
	assert psi(2, 12).to_list() == [1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]
	assert euler_E(3, 300) == classical(ThetaKind.E, 3, 300)
	assert classical('PHI', 5, 101) == phi(5, 101)
	assert series_sum(ThetaKind.A_FN, 7, 200) == borwein_a(7, 200)

	with pytest.raises(InputError):
		euler_E(0, 10)
	with pytest.raises(InputError):
		classical('THETA', 1, 10)



def test_first_coefficients():
	assert euler_E(1, 12).to_list() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
	assert theta_f(1, 1, 1, 2, 7).to_list() == [1, 1, 1, 0, 0, 1, 0, 1]
	assert borwein_a(1, 7).to_list() == [1, 6, 0, 6, 6, 0, 0, 12]
	assert borwein_c(1, 4).to_list() == [3, 3, 6, 0, 6]



def test_triple_product():
	for arguments in [(1, 1, 1, 1), (-1, 1, -1, 1), (1, 1, 1, 3), (-1, 1, -1, 2), (1, 2, -1, 3), (-1, 3, 1, 4), (1, 0, 1, 5)]:
		assert jacobi_triple_product(*arguments, 400) == theta_f(*arguments, 400)

	assert theta_f(-1, 0, 1, 1, 50) == QSeries.zero(50)
	assert jacobi_triple_product(-1, 0, 1, 1, 50) == QSeries.zero(50)

	with pytest.raises(InputError):
		theta_f(1, 0, 1, 0, 10)
	with pytest.raises(InputError):
		theta_f(2, 1, 1, 1, 10)
	with pytest.raises(InputError):
		jacobi_triple_product(1, -1, 1, 3, 10)



def test_eta_quotients():
	assert eta_quotient({2 : 2}, {1 : 1}, N) == psi(1, N)
	assert eta_quotient({1 : 2}, {2 : 1}, N) == alternate(phi(1, N))
	assert eta_quotient({}, {}, 10) == QSeries.one(10)

	with pytest.raises(InputError):
		eta_quotient({1 : -1}, {}, 10)
	with pytest.raises(InputError):
		eta_quotient({0 : 1}, {}, 10)



def test_character_series():
	d4 = char_square_series('D-4', 100)
	assert [d4[n*n] for n in range(1, 11)] == [1, 0, -3, 0, 5, 0, -7, 0, 9, 0]
	assert d4.nonzero_count() == 5

	d2 = char_square_series('D-2', 100)
	assert [d2[n*n] for n in range(1, 8)] == [1, 0, 3, 0, -5, 0, -7]

	d12 = char_square_series('D-12', 200)
	assert [d12[n*n] for n in (1, 5, 7, 11, 13)] == [1, -5, 7, -11, 13]

	d3 = char_square_series('D-3ALT', 30)
	assert [d3[n*n] for n in range(1, 6)] == [1, 2, 0, -4, -5]

	assert char_square_series('D4', 50) == char_square_series('D−4', 50) == char_square_series('D-4', 50)
	with pytest.raises(InputError):
		char_square_series('D-5', 10)
