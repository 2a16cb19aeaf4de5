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


"""Tests for the Kronecker symbol, factorization and the divisor formulas.

"""

import math

import numpy as np
import pytest
import sympy

from thetaforms._exceptions import InputError
from thetaforms.divisors import (EqualityKind, Factorization, HurwitzFormId, InequalityKind, equality_class,
								 factorize, hurwitz_rep_of_square, inequality_report, kronecker)
from thetaforms.lattice import TernaryForm, theta_series



LIMIT = 150
square_counts = {
	'F111' : theta_series(TernaryForm(1, 1, 1), LIMIT**2).to_list(),
	'F112' : theta_series(TernaryForm(1, 1, 2), LIMIT**2).to_list(),
	'F113' : theta_series(TernaryForm(1, 1, 3), LIMIT**2).to_list(),
	'PAIR' : (theta_series(TernaryForm(1, 3, 36), LIMIT**2) + theta_series(TernaryForm(3, 4, 9), LIMIT**2)).to_list(),
}



def test_kronecker_values():
	assert kronecker(-1, 5) == 1
	assert kronecker(-2, 3) == 1
	assert kronecker(-4, 6) == 0
	assert kronecker(-3, 2) == -1
	assert kronecker(5, 2) == -1
	assert kronecker(-7, 2) == 1
	assert kronecker(1, 0) == 1
	assert kronecker(2, 0) == 0
	assert kronecker(-1, -1) == -1
	assert kronecker(3, -1) == 1

	for a in (-12, -8, -7, -4, -3, -2, 2, 5, 13):
		for n in range(1, 500, 2):
			assert kronecker(a, n) == sympy.jacobi_symbol(a % n, n)



def test_kronecker_structure():
	rng = np.random.default_rng(7)
	for a in (-12, -4, -3, -8, 5, 12):
		for n in range(1, 10001, 7):
			assert kronecker(a, n + abs(a)) == kronecker(a, n)
		for m, n in rng.integers(1, 100, size=(200, 2)):
			assert kronecker(a, int(m)*int(n)) == kronecker(a, int(m)) * kronecker(a, int(n))

	for a, b in rng.integers(-60, 61, size=(300, 2)):
		for n in (1, 2, 7, 8, 15, 24, 45, 97, 1000, 1001):
			assert kronecker(int(a)*int(b), n) == kronecker(int(a), n) * kronecker(int(b), n)



def test_factorize():
	for n in range(1, 3000):
		assert dict(factorize(n).factors) == sympy.factorint(n)

	assert factorize(1).factors == ()
	assert factorize(2**61 - 1).factors == ((2**61 - 1, 1),)
	assert factorize(1000003 * 1000033).factors == ((1000003, 1), (1000033, 1))
	assert factorize(2**63 - 1).factors == ((7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1))
	assert factorize(360).primes() == [2, 3, 5]
	assert factorize(360).exponent(2) == 3
	assert factorize(360).exponent(7) == 0

	with pytest.raises(InputError):
		factorize(0)
	with pytest.raises(InputError):
		factorize(2**63)
	with pytest.raises(InputError):
		Factorization(12, ((2, 2), (4, 1)))
	with pytest.raises(InputError):
		Factorization(12, ((2, 1), (3, 1)))



@pytest.mark.parametrize('form_id', [member.name for member in HurwitzFormId])
def test_hurwitz_formulas(form_id):
	for n in range(1, LIMIT + 1):
		assert hurwitz_rep_of_square(form_id, n) == square_counts[form_id][n*n]



@pytest.mark.parametrize('form_id, norm', [('F111', 6), ('F112', 4), ('F113', 4), ('PAIR', 2)])
def test_hurwitz_multiplicative(form_id, norm):
	rng = np.random.default_rng(3)
	pairs = 0
	while pairs < 150:
		m, n = (int(v) for v in rng.integers(1, 10001, size=2))
		if math.gcd(m, n) != 1 or math.gcd(m*n, 6) != 1:
			continue
		pairs += 1
		assert norm * hurwitz_rep_of_square(form_id, m*n) == hurwitz_rep_of_square(form_id, m) * hurwitz_rep_of_square(form_id, n)



def test_hurwitz_values():
	assert hurwitz_rep_of_square('F111', 5) == 30
	assert hurwitz_rep_of_square(HurwitzFormId.F111, 1) == 6
	assert hurwitz_rep_of_square('pair_1_3_36_3_4_9', 1) == 2

	with pytest.raises(InputError):
		hurwitz_rep_of_square('F114', 5)
	with pytest.raises(InputError):
		hurwitz_rep_of_square('F111', 0)



def test_equality_class():
	assert equality_class('M_MOD4', 1)
	assert equality_class(EqualityKind.M_MOD4, 65)
	assert not equality_class('M_MOD4', 15)
	assert equality_class('E_MOD8', 3*11*17)
	assert not equality_class('E_MOD8', 5)
	assert equality_class('W_MOD3', 7*13)
	assert not equality_class('W_MOD3', 10)

	with pytest.raises(InputError):
		equality_class('M_MOD4', 4)
	with pytest.raises(InputError):
		equality_class('W_MOD3', 9)



def test_inequality_examples():
	report = inequality_report('HC1', 3)
	assert report.lhs == 5
	assert not report.equality_predicted and not report.equality_observed

	report = inequality_report(InequalityKind.HC1, 5)
	assert report.lhs == 5 and report.rhs == 5
	assert report.equality_predicted and report.equality_observed
	assert report.to_dict()['kind'] == 'HC1'



@pytest.mark.parametrize('kind', list(InequalityKind))
def test_inequalities(kind):
	if kind in (InequalityKind.HC1, InequalityKind.HC2):
		arguments = range(1, 1000, 2)
	else:
		arguments = [n for n in range(1, 1000) if n % 3 != 0]

	for n in arguments:
		report = inequality_report(kind, n)
		assert report.lhs >= n
		assert report.equality_observed == report.equality_predicted
