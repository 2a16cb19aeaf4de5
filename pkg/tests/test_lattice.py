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


"""Tests for the lattice enumeration.

"""

import numpy as np
import pytest

from thetaforms import lattice
from thetaforms._exceptions import InputError, NotPositiveDefiniteError
from thetaforms.classifier import catalog_form, catalog_ids
from thetaforms.lattice import (JP1, JP2, PRESETS, BinaryForm, CongruenceSystem, TernaryForm, apply_unimodular,
								binary_theta, discriminant, enumeration_box, is_positive_definite, rep_count,
								restricted_preset, restricted_theta, theta_series)



r3 = [1, 6, 12, 8, 6, 24, 24, 0, 12, 30, 24]



def brute_force_theta(form, N):
	gram = np.array([[2*form.a, form.f, form.e], [form.f, 2*form.b, form.d], [form.e, form.d, 2*form.c]]) / 2
	bound = int(np.sqrt(N / np.linalg.eigvalsh(gram).min())) + 1
	axis = np.arange(-bound, bound + 1)
	x, y, z = np.meshgrid(axis, axis, axis, indexing='ij')
	values = form(x, y, z).ravel()
	return np.bincount(values[values <= N], minlength=N + 1).tolist()



def test_forms():
	assert TernaryForm.from_literal('9,16,36,16,4,8') == JP1
	assert TernaryForm.from_literal(' 1, 1, 3') == TernaryForm(1, 1, 3, 0, 0, 0)
	assert str(JP2) == '(9,17,32,-8,8,6)'
	assert JP1(1, 0, 0) == 9
	assert JP2(1, 1, 1) == 9 + 17 + 32 - 8 + 8 + 6
	assert discriminant(TernaryForm(1, 1, 1)) == 4
	assert TernaryForm(1, 1, 1).scaled((1, 2, 2)) == TernaryForm(1, 4, 4)
	assert is_positive_definite(JP1) and is_positive_definite(JP2)
	assert not is_positive_definite(TernaryForm(1, 1, 1, 0, 0, 4))
	assert not is_positive_definite(TernaryForm(1, 1, 0))

	with pytest.raises(InputError):
		TernaryForm.from_literal('1,2')
	with pytest.raises(InputError):
		TernaryForm.from_literal('1,x,3')
	with pytest.raises(InputError):
		TernaryForm(1.5, 1, 1)



def test_sums_of_three_squares():
	assert theta_series(TernaryForm(1, 1, 1), 10).to_list() == r3
	assert rep_count(TernaryForm(1, 1, 1), 9) == 30
	assert rep_count(TernaryForm(1, 1, 1), -3) == 0
	assert enumeration_box(TernaryForm(1, 1, 1), 10) == ((-3, 3), (-3, 3), (-3, 3))



@pytest.mark.parametrize('form', [TernaryForm(1, 1, 1), TernaryForm(1, 3, 36), JP1, JP2,
								  TernaryForm(2, 3, 5, 1, 1, 1), TernaryForm(2, 2, 2, -1, -1, -1)])
def test_enumeration_box_soundness(form):
	rng = np.random.default_rng(5)
	for N in (1, 7, 50, 400):
		box = enumeration_box(form, N)
		width = max(hi - lo for lo, hi in box) + 2
		for axis in range(3):
			for outside in (box[axis][0] - 1, box[axis][1] + 1):
				triples = rng.integers(-3*width, 3*width + 1, size=(200, 3))
				triples[:, axis] = outside
				values = form(triples[:, 0], triples[:, 1], triples[:, 2])
				assert (values > N).all()



def test_cached_rep_count():
	lattice._cached_theta.cache_clear()
	expected = theta_series(JP2, 300).to_list()

	assert [rep_count(JP2, n) for n in range(301)] == expected
	assert lattice._cached_theta.cache_info().misses == 4
	assert rep_count(JP2, 20) == 2
	assert lattice._cached_theta.cache_info().misses == 4



@pytest.mark.parametrize('form_id', catalog_ids())
def test_brute_force(form_id):
	form = catalog_form(form_id).form
	assert theta_series(form, 500).to_list() == brute_force_theta(form, 500)



def test_not_positive_definite():
	with pytest.raises(NotPositiveDefiniteError):
		theta_series(TernaryForm(1, 1, 1, 0, 0, 4), 10)
	with pytest.raises(InputError):
		theta_series(TernaryForm(-1, 1, 1), 10)
	with pytest.raises(NotPositiveDefiniteError):
		binary_theta(BinaryForm(1, 2, 1), 10)
	with pytest.raises(NotPositiveDefiniteError):
		rep_count(TernaryForm(0, 1, 1), 1)



def test_parallel_enumeration():
	assert theta_series(JP2, 3000, jobs=3) == theta_series(JP2, 3000)
	assert restricted_preset('B30', 2000, jobs=2) == restricted_preset('B30', 2000)

	with pytest.raises(InputError):
		theta_series(JP1, 100, jobs=0)



def test_restricted_sums():
	odd = restricted_preset('G0', 100)
	assert odd[3] == 8
	assert odd[11] == 24
	assert all(odd[n] == 0 for n in range(101) if n % 8 != 3)

	b10 = restricted_preset('B10', 200)
	assert b10[9] == 1
	assert [n for n in range(200) if b10[n] != 0 and n % 8 != 1] == []

	manual = restricted_theta(TernaryForm(1, 1, 1), (1, 1, 1), [(1, 0, 0, 4, 1), (0, 1, 0, 8, 2), (0, 0, 1, 8, 2)], 200)
	assert manual == b10
	assert restricted_preset('b10', 200) == b10

	scaled = restricted_theta(TernaryForm(1, 1, 1), (1, 2, 2), [], 50)
	assert scaled == theta_series(TernaryForm(1, 4, 4), 50)

	assert restricted_preset('JP1_EVEN', 500) + restricted_preset('JP1_ODD', 500) == theta_series(JP1, 500)
	assert set(PRESETS) >= {'B10', 'B20', 'B30', 'G0'}

	with pytest.raises(InputError):
		restricted_preset('B40', 10)
	with pytest.raises(InputError):
		CongruenceSystem(((1, 0, 0, 4, 4),))
	with pytest.raises(InputError):
		CongruenceSystem(((1, 0, 0, 0, 0),))
	with pytest.raises(InputError):
		CongruenceSystem((), (1, 0, 1))
	assert CongruenceSystem(((1, 0, -2, 4, 2),)).contains(2, 5, 0)
	assert not CongruenceSystem(((1, 0, -2, 4, 2),)).contains(2, 5, 1)



def test_binary_forms():
	assert binary_theta(BinaryForm(1, 0, 1), 10).to_list() == [1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8]
	assert apply_unimodular(BinaryForm(72, 12, 1), ((0, 1), (-1, -6))) == BinaryForm(1, 0, 36)
	assert apply_unimodular(BinaryForm(72, 60, 13), ((-1, 1), (2, -3))) == BinaryForm(4, 0, 9)

	with pytest.raises(InputError):
		apply_unimodular(BinaryForm(1, 0, 1), ((2, 0), (0, 1)))
	with pytest.raises(InputError):
		apply_unimodular(BinaryForm(1, 0, 1), ((1, 0, 0),))



def test_unimodular_invariance():
	rng = np.random.default_rng(2021)
	generators = [np.array([[0, -1], [1, 0]])] + [np.array([[1, k], [0, 1]]) for k in (-2, -1, 1, 2)] \
				 + [np.array([[1, 0], [k, 1]]) for k in (-2, -1, 1, 2)]

	for bf in [BinaryForm(72, 12, 1), BinaryForm(72, 60, 13), BinaryForm(2, 1, 3), BinaryForm(1, 1, 1)]:
		reference = binary_theta(bf, 400)
		for _ in range(50 // 4 + 1):
			M = np.eye(2, dtype=np.int64)
			for index in rng.integers(0, len(generators), size=3):
				M = M @ generators[index]
			assert binary_theta(apply_unimodular(bf, M), 400) == reference
