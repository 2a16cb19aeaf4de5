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


"""Tests for the truncated q-series.

"""

import numpy as np
import pytest

from thetaforms._exceptions import CoefficientOverflowError, InputError
from thetaforms.series import (INT64_MAX, BiLaurent, QSeries, add, alternate, bivariate_product_check, dilate, divide,
							   first_mismatch, mul, pochhammer, power, project, reciprocal, scale, shift, truncate)



s = QSeries([1, 2, 0, 0, 2])
euler = pochhammer(1, 1, 1, 60)
partitions = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]



def test_construction():
	assert s.trunc == 4
	assert len(s) == 5
	assert s.to_list() == [1, 2, 0, 0, 2]
	assert s[4] == 2
	assert s.nonzero_count() == 3

	padded = QSeries([1, 1], 5)
	assert padded.to_list() == [1, 1, 0, 0, 0, 0]
	cut = QSeries([1, 2, 3, 4], 1)
	assert cut.to_list() == [1, 2]

	assert QSeries.monomial(3, 5, -7).to_list() == [0, 0, 0, -7, 0, 0]
	assert QSeries.monomial(9, 5) == QSeries.zero(5)
	assert QSeries.one(2).to_list() == [1, 0, 0]

	with pytest.raises(InputError):
		s.coefficient(5)
	with pytest.raises(InputError):
		QSeries([0.5, 1.0])
	with pytest.raises(InputError):
		QSeries([1], -1)



def test_immutability():
	with pytest.raises(ValueError):
		s.coeffs[0] = 5

	array = np.array([1, 2, 3], dtype=np.int64)
	t = QSeries(array)
	array[0] = 7
	assert t[0] == 1



def test_arithmetic():
	assert (s * s).to_list() == [1, 4, 4, 0, 4]
	assert (s + 1).to_list() == [2, 2, 0, 0, 2]
	assert (1 - s).to_list() == [0, -2, 0, 0, -2]
	assert (3 * s).to_list() == [3, 6, 0, 0, 6]
	assert (-s).to_list() == [-1, -2, 0, 0, -2]
	assert (s**3) == s * s * s
	assert power(s, 0) == QSeries.one(4)

	short = QSeries([1, 1])
	assert (s + short).trunc == 1
	assert (s + short).to_list() == [2, 3]
	assert (s * short).trunc == 1

	with pytest.raises(InputError):
		power(s, -1)



def test_overflow():
	big = QSeries([INT64_MAX])
	with pytest.raises(CoefficientOverflowError):
		big + QSeries([1])
	with pytest.raises(CoefficientOverflowError):
		scale(2, QSeries([2**62]))
	with pytest.raises(CoefficientOverflowError):
		QSeries([2**40]) * QSeries([2**40])
	with pytest.raises(CoefficientOverflowError):
		QSeries([2**63])

	assert (big - QSeries([1]))[0] == INT64_MAX - 1
	assert QSeries([2**62]) * QSeries([1]) == QSeries([2**62])



def test_euler_product():
	expected = np.zeros(61, dtype=np.int64)
	for n in range(-7, 8):
		e = n*(3*n + 1)//2
		if e <= 60:
			expected[e] += 1 if n % 2 == 0 else -1
	assert euler.to_list() == expected.tolist()

	with pytest.raises(InputError):
		pochhammer(0, 1, 1, 10)
	with pytest.raises(InputError):
		pochhammer(1, 2, 1, 10)



def test_division():
	p = reciprocal(truncate(euler, 15))
	assert p.to_list() == partitions
	assert divide(euler * s, euler) == truncate(s, 4)
	assert divide(s, QSeries([-1, 1, 0, 0, 0])).to_list() == [-1, -3, -3, -3, -5]

	with pytest.raises(InputError):
		divide(s, QSeries([2, 1]))

	# the partition numbers leave the 64 bit range before degree 600
	with pytest.raises(CoefficientOverflowError):
		reciprocal(pochhammer(1, 1, 1, 600))



def test_substitutions():
	t = QSeries([1, 1, 1])
	assert dilate(t, 3).to_list() == [1, 0, 0, 1, 0, 0, 1]
	assert dilate(t, 3, 4).to_list() == [1, 0, 0, 1, 0]
	assert dilate(t, 3, 4).trunc == 4
	assert alternate(QSeries([1, 1, 1, 1])).to_list() == [1, -1, 1, -1]
	assert project(QSeries([1, 2, 3, 4, 5, 6]), 4, 1).to_list() == [0, 2, 0, 0, 0, 6]
	assert shift(t, 1).to_list() == [0, 1, 1]
	assert shift(t, 5) == QSeries.zero(2)

	with pytest.raises(InputError):
		dilate(t, 0)
	with pytest.raises(InputError):
		project(t, 4, 4)
	with pytest.raises(InputError):
		truncate(t, 3)



def random_series(rng, trunc):
	return QSeries(rng.integers(-1000, 1001, size=trunc + 1, dtype=np.int64))



def test_algebraic_properties():
	rng = np.random.default_rng(11)
	for _ in range(25):
		a, b, c = (random_series(rng, int(trunc)) for trunc in rng.integers(0, 60, size=3))
		d, e = random_series(rng, a.trunc), random_series(rng, a.trunc)

		assert mul(a, b) == mul(b, a)
		assert mul(a, b).trunc == min(a.trunc, b.trunc)
		assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
		assert mul(a, add(d, e)) == add(mul(a, d), mul(a, e))
		assert mul(a, d).trunc == a.trunc
		assert alternate(alternate(a)) == a

		for k in range(1, 6):
			assert project(dilate(a, k), k, 0) == dilate(a, k)
			assert project(dilate(a, k, a.trunc), k, 0) == dilate(a, k, a.trunc)

		for t in range(1, 7):
			total = project(a, t, 0)
			for r in range(1, t):
				total = add(total, project(a, t, r))
			assert total == a



def test_first_mismatch():
	assert first_mismatch(s, s) is None
	assert first_mismatch(s, 2*s) == (0, 1, 2)
	assert first_mismatch(s, QSeries([1, 2, 0, 1, 2])) == (3, 0, 1)
	assert first_mismatch(s, QSeries([1, 2])) is None



def test_bilaurent():
	b = BiLaurent({-1 : [0, 1], 0 : [0, 0], 2 : QSeries([1, 0, 3])}, 1)
	assert b.z_exponents() == [-1, 2]
	assert b[2].to_list() == [1, 0]
	assert b[5] == QSeries.zero(1)

	with pytest.raises(InputError):
		BiLaurent({0 : QSeries([1])}, 3)



def test_quintuple_product():
	report = bivariate_product_check(120)
	assert report.status == 'PASS'
	assert report.first_mismatch is None
	assert report.trunc == 120

	assert bivariate_product_check(60, z_report=3).status == 'PASS'
	assert bivariate_product_check(60, z_report=[0, 1, -1]).status == 'PASS'
