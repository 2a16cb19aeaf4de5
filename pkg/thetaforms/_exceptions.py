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

"""Exceptions raised by thetaforms.

"""



class ThetaFormsException(Exception):
	"""Base class for exceptions raised by thetaforms.

	"""

	pass



class InputError(ThetaFormsException):
	"""This exception gets raised when the user input to a public API method is wrong or inconsistent.

	"""

	def __init__(self, obj, param, message=None):
		self.obj = obj
		self.param = param
		self.message = message



	def __str__(self):
		if self.message is None:
			return f'Not a valid input for object {self.obj}. The faulty input is for the parameter {self.param}.'
		else:
			return f'Not a valid input for object {self.obj}. The faulty input is for the parameter {self.param}.\n{self.message}'



class NotPositiveDefiniteError(InputError):
	"""This exception is raised when a lattice operation receives a form that is not positive definite.

	Representation numbers are only finite for positive definite forms,
	so every enumeration refuses such forms up front.
	"""

	def __init__(self, obj, form, message=None):
		super().__init__(obj, 'form', message)
		self.form = form



	def __str__(self):
		base = f'The form {self.form} handed to {self.obj} is not positive definite.'
		if self.message is None:
			return base
		else:
			return f'{base}\n{self.message}'



class ConfigError(ThetaFormsException):
	"""This exception gets raised when parameters in the config file are wrong.

	"""

	pre_message = 'You have an error in your config file.\n'

	def __init__(self, section, key, message=None):
		self.section = section
		self.key = key
		self.message = message



	def __str__(self):
		if self.message is None:
			return f'{self.pre_message}The error is located in section [{self.section}] in the key {self.key}.'
		else:
			return f'{self.pre_message}The error is located in section [{self.section}] in the key {self.key}.\n{self.message}'



class CoefficientOverflowError(ThetaFormsException):
	"""This exception is raised when a series coefficient leaves the signed 64 bit range.

	Coefficients are never allowed to wrap around. An operation that would
	produce an out of range coefficient raises this error instead.
	"""

	def __init__(self, operation, message=None):
		self.operation = operation
		self.message = message



	def __str__(self):
		if self.message is None:
			return f'Integer overflow in the series operation {self.operation}.'
		else:
			return f'Integer overflow in the series operation {self.operation}.\n{self.message}'



class ClaimViolationError(ThetaFormsException):
	"""This exception is raised when a checked arithmetic claim does not hold.

	"""

	def __init__(self, claim, argument, message=None):
		self.claim = claim
		self.argument = argument
		self.message = message



	def __str__(self):
		if self.message is None:
			return f'The claim {self.claim} fails for the argument {self.argument}.'
		else:
			return f'The claim {self.claim} fails for the argument {self.argument}.\n{self.message}'
