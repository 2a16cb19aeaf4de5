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


"""The ``thetaforms`` command.

Exit codes: 0 on success, 2 for invalid input (including unknown identity
names and invalid config files), 3 for a form that is not positive
definite, 4 if a verification failed or a check found counterexamples.
"""

import argparse
import os
import sys

from .._exceptions import ClaimViolationError, CoefficientOverflowError, ConfigError, InputError, NotPositiveDefiniteError
from ..classifier import (catalog_ids, excluded, gauss_eureka_check, genus_mate_compare, genus_mate_inequalities,
						  jp_lemma_check, kaplansky_identity_check, restricted_theorem_check, scan_excluded)
from ..divisors import HurwitzFormId, InequalityKind, factorize, hurwitz_rep_of_square, inequality_report
from ..lattice import PRESETS, TernaryForm, restricted_preset, theta_series
from ..utils import _output_format_configuration, create_config, load_defaults
from ..verification import get_case, registered_names, verify_all
from ._output import render



EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_POSITIVE_DEFINITE = 3
EXIT_FAILED = 4

LEMMAS = ('JP1', 'JP2', 'B10', 'B20', 'B30', 'GENUS', 'G0', 'KAPLANSKY')



def _common_parser():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--format', type=str, default=None, help='output format: text, json or csv')
	common.add_argument('--out', type=str, default=None, help='write the output to this file instead of stdout')
	common.add_argument('--config', type=str, default=None, help='.ini file with default settings')
	common.add_argument('--jobs', type=int, default=None, help='number of worker processes')
	common.add_argument('--verbose', action='store_true', help='print progress of long running checks')
	return common



def _generate_parser():
	common = _common_parser()
	parser = argparse.ArgumentParser(prog='thetaforms', description='Exact theta series of ternary quadratic forms and q-series identities.')
	subparsers = parser.add_subparsers(dest='command', metavar='command')
	subparsers.required = True

	theta = subparsers.add_parser('theta', parents=[common], help='theta series of a ternary form')
	theta.add_argument('--form', type=str, required=True, help='coefficients a,b,c[,d,e,f] of ax^2+by^2+cz^2+dyz+exz+fxy')
	theta.add_argument('--n', type=int, default=None, help='truncation order')
	theta.add_argument('--nonzero', action='store_true', help='only list non-zero coefficients')
	theta.set_defaults(handler=_cmd_theta)

	verify = subparsers.add_parser('verify', parents=[common], help='verify registered identities')
	verify.add_argument('--id', type=str, action='append', default=None, help='identity name, may be repeated')
	verify.add_argument('--all', action='store_true', help='verify every registered identity')
	verify.add_argument('--n', type=int, default=None, help='truncation order (default: per identity)')
	verify.add_argument('--no-timing', action='store_true', help='report 0 ms for reproducible output')
	verify.set_defaults(handler=_cmd_verify)

	hurwitz = subparsers.add_parser('hurwitz', parents=[common], help='representations of n^2 from the divisor formulas')
	hurwitz.add_argument('--form', type=str, required=True, help=', '.join(member.name for member in HurwitzFormId))
	hurwitz.add_argument('--n', type=int, required=True)
	hurwitz.set_defaults(handler=_cmd_hurwitz)

	classify = subparsers.add_parser('classify', parents=[common], help='excluded set membership of n')
	classify.add_argument('--form', type=str, required=True, help=', '.join(catalog_ids()))
	classify.add_argument('--n', type=int, required=True)
	classify.set_defaults(handler=_cmd_classify)

	scan = subparsers.add_parser('scan', parents=[common], help='compare the excluded set with the lattice count')
	scan.add_argument('--form', type=str, required=True, help=', '.join(catalog_ids()))
	scan.add_argument('--n-max', type=int, required=True)
	scan.set_defaults(handler=_cmd_scan)

	restricted = subparsers.add_parser('restricted', parents=[common], help='restricted theta sums')
	restricted.add_argument('--preset', type=str, required=True, help=', '.join(PRESETS))
	restricted.add_argument('--n', type=int, default=None, help='truncation order')
	restricted.add_argument('--nonzero', action='store_true', help='only list non-zero coefficients')
	restricted.set_defaults(handler=_cmd_restricted)

	genus = subparsers.add_parser('genus', parents=[common], help='compare the genus mates (1,3,36) and (3,4,9) at n')
	genus.add_argument('--n', type=int, required=True)
	genus.set_defaults(handler=_cmd_genus)

	inequality = subparsers.add_parser('inequality', parents=[common], help='lower bound for a normalized square count')
	inequality.add_argument('--id', type=str, required=True, help=', '.join(member.name for member in InequalityKind))
	inequality.add_argument('--n', type=int, required=True)
	inequality.set_defaults(handler=_cmd_inequality)

	lemma = subparsers.add_parser('lemma', parents=[common], help='check the clauses of a lemma up to a bound')
	lemma.add_argument('--id', type=str, required=True, help=', '.join(LEMMAS))
	lemma.add_argument('--n-max', type=int, required=True)
	lemma.set_defaults(handler=_cmd_lemma)

	listing = subparsers.add_parser('list', parents=[common], help='list the registered identities')
	listing.set_defaults(handler=_cmd_list)

	factor = subparsers.add_parser('factor', parents=[common], help='prime factorization')
	factor.add_argument('--n', type=int, required=True)
	factor.set_defaults(handler=_cmd_factor)

	return parser



def _settings(args):
	"""Merges the config file with the command line flags."""

	if args.config is not None:
		if not os.path.isfile(args.config):
			raise InputError('thetaforms._cli', 'config', f'The config file {args.config} does not exist.')
		defaults = load_defaults(create_config(args.config))
	else:
		defaults = load_defaults()

	settings = dict(defaults)
	if args.format is not None:
		settings['format'] = _output_format_configuration(args.format)
	if args.jobs is not None:
		settings['jobs'] = args.jobs
	if args.verbose:
		settings['verbose'] = True
	if getattr(args, 'no_timing', False):
		settings['timing'] = False

	# progress lines would corrupt machine readable output
	settings['verbose'] = settings['verbose'] and settings['format'] == 'text' and args.out is None

	return settings



def _coefficient_records(series, nonzero):
	return [{'n' : n, 'coefficient' : c} for n, c in enumerate(series.to_list()) if c != 0 or not nonzero]



def _cmd_theta(args, settings):
	form = TernaryForm.from_literal(args.form)
	N = args.n if args.n is not None else settings['trunc']
	records = _coefficient_records(theta_series(form, N, settings['jobs']), args.nonzero)

	return records, [f'{r["n"]} {r["coefficient"]}' for r in records], EXIT_OK



def _cmd_verify(args, settings):
	if not args.all and not args.id:
		raise InputError('thetaforms._cli', 'id', 'Name at least one identity with --id or use --all.')

	names = None if args.all else [get_case(name).name for name in args.id]
	reports = verify_all(args.n, settings['jobs'], settings['verbose'], settings['timing'], names)

	lines = []
	for report in reports:
		line = f'{report.name:<20} {report.status}  trunc={report.trunc}  {report.ms} ms'
		if report.first_mismatch is not None:
			mismatch = report.first_mismatch
			line += f'  first mismatch at q^{mismatch.degree}: {mismatch.lhs} != {mismatch.rhs}'
			if mismatch.z_exponent is not None:
				line += f' (z^{mismatch.z_exponent})'
		lines.append(line)

	code = EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED
	return [report.to_dict() for report in reports], lines, code



def _cmd_hurwitz(args, settings):
	value = hurwitz_rep_of_square(args.form, args.n)
	record = {'form' : args.form.upper(), 'n' : args.n, 'value' : value}

	return [record], [f'r({record["form"]}; {args.n}^2) = {value}'], EXIT_OK



def _cmd_classify(args, settings):
	verdict = excluded(args.form, args.n)
	record = {'form' : args.form.upper(), 'n' : args.n}
	record.update(verdict.to_dict())

	if verdict.excluded:
		text = f'{args.n} is excluded for {record["form"]}: {verdict.reason} ({verdict.detail})'
	else:
		text = f'{args.n} is represented by {record["form"]}'
	return [record], [text], EXIT_OK



def _cmd_scan(args, settings):
	mismatches = scan_excluded(args.form, args.n_max, settings['jobs'], settings['verbose'])
	record = {'form' : args.form.upper(), 'n_max' : args.n_max, 'mismatches' : mismatches}

	text = f'{record["form"]} up to {args.n_max}: {len(mismatches)} mismatches'
	if mismatches:
		text += ' at ' + ', '.join(str(n) for n in mismatches)
	return [record], [text], EXIT_FAILED if mismatches else EXIT_OK



def _cmd_restricted(args, settings):
	N = args.n if args.n is not None else settings['trunc']
	records = _coefficient_records(restricted_preset(args.preset, N, settings['jobs']), args.nonzero)

	return records, [f'{r["n"]} {r["coefficient"]}' for r in records], EXIT_OK



def _cmd_genus(args, settings):
	record = genus_mate_compare(args.n).to_dict()
	text = (f'r(1,3,36; {args.n}) = {record["r_1_3_36"]}, r(3,4,9; {args.n}) = {record["r_3_4_9"]}'
			f' ({record["relation"]}, difference {record["expected_difference"]})')

	return [record], [text], EXIT_OK



def _cmd_inequality(args, settings):
	record = inequality_report(args.id, args.n).to_dict()
	relation = '=' if record['equality_observed'] else '>'
	text = f'{record["kind"]}: {record["lhs"]} {relation} {record["rhs"]} (equality predicted: {record["equality_predicted"]})'

	return [record], [text], EXIT_OK



def _cmd_lemma(args, settings):
	key = args.id.strip().upper()
	jobs = settings['jobs']
	verbose = settings['verbose']

	if key in ('JP1', 'JP2'):
		failures = jp_lemma_check(key, args.n_max, jobs, verbose)
	elif key in ('B10', 'B20', 'B30'):
		failures = restricted_theorem_check(key, args.n_max, jobs, verbose)
	elif key == 'GENUS':
		failures = genus_mate_inequalities(args.n_max, jobs, verbose)
	elif key == 'G0':
		failures = gauss_eureka_check(args.n_max, jobs)
	elif key == 'KAPLANSKY':
		failures = kaplansky_identity_check(args.n_max, args.n_max // 2, jobs)
	else:
		raise InputError('thetaforms._cli', 'id', f'Unknown lemma {args.id}. Choose one of {", ".join(LEMMAS)}.')

	records = [{'clause' : clause, 'failures' : failed} for clause, failed in failures.items()]
	lines = [f'{key} {r["clause"]:<26} {"ok" if not r["failures"] else "FAILED at " + ", ".join(str(n) for n in r["failures"])}'
			 for r in records]

	code = EXIT_FAILED if any(r['failures'] for r in records) else EXIT_OK
	return records, lines, code



def _cmd_list(args, settings):
	records = []
	for name in registered_names():
		case = get_case(name)
		records.append({'identity' : name, 'default_trunc' : case.default_N, 'reference' : case.reference})

	return records, [f'{r["identity"]:<20} {r["default_trunc"]:>6}  {r["reference"]}' for r in records], EXIT_OK



def _cmd_factor(args, settings):
	factorization = factorize(args.n)
	text = ' * '.join(f'{p}^{v}' if v > 1 else str(p) for p, v in factorization) or '1'
	record = {'n' : args.n, 'factorization' : text, 'primes' : factorization.primes()}

	return [record], [f'{args.n} = {text}'], EXIT_OK



def _error(message):
	print('Error: ' + message, file=sys.stderr)



def main(argv=None):
	"""Runs the command line interface.

	Parameters
	----------
	argv : list[str] or None, optional
		The arguments. If this is ``None``, ``sys.argv[1:]`` is used.
		Default is ``None``.

	Returns
	-------
	int
		The exit code.
	"""

	parser = _generate_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as error:
		return error.code

	try:
		settings = _settings(args)
		records, lines, code = args.handler(args, settings)
	except NotPositiveDefiniteError as error:
		_error(str(error))
		return EXIT_NOT_POSITIVE_DEFINITE
	except (InputError, ConfigError, CoefficientOverflowError) as error:
		_error(str(error))
		return EXIT_INPUT
	except ClaimViolationError as error:
		_error(str(error))
		return EXIT_FAILED

	output = render(records, settings['format'], lines)
	if args.out is not None:
		with open(args.out, 'w') as file:
			file.write(output)
	else:
		sys.stdout.write(output)

	return code
