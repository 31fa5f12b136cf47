# Copyright 2026 The racglattice developers
#
# This file is part of racglattice: you can redistribute it and/or
# modify it under the terms of the GNU General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# racglattice is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with racglattice. If not, see <http://www.gnu.org/licenses/>.
"""Command-line racglattice tool, have a 'racglattice --help' to get in"""

import argparse
import sys

from racglattice import bundlefile, logger, selftest, svg, version
from racglattice.build import build
from racglattice.builder import BUILDERS, CLI_VARIANTS, verify
from racglattice.errors import RacgError
from racglattice.forms import QuadraticForm
from racglattice.spheres import bundle_spheres


class CatchExceptions:
    """Decorator wrapping a function in a try/except block

    When an exception occurs, display a user friendly message on standard
    error and return the exit code of the error: the `exit_code` of a
    racglattice error, 2 for an input/output error and 1 otherwise.

    Parameters
    ----------
    function :
        The function to wrap in a try/except block

    """
    def __init__(self, function):
        self.function = function

    def __call__(self, *args, **kwargs):
        """Executes the wrapped function and catch common exceptions"""
        try:
            return self.function(*args, **kwargs)

        except RacgError as err:
            return self.exit(f'fatal error: {err}', err.exit_code)

        except (IOError, OSError) as err:
            return self.exit(f'fatal error: {err}', 2)

        except (ValueError, RuntimeError, AssertionError) as err:
            return self.exit(f'fatal error: {err}', 1)

        except KeyboardInterrupt:  # pragma: nocover
            return self.exit('keyboard interruption, exiting', 1)

    @staticmethod
    def exit(msg, code):
        """Write `msg` on stderr and return the error code"""
        sys.stderr.write(msg.strip() + '\n')
        return code


def parse_args(argv=None):
    """Argument parser for the racglattice tool"""
    parser = argparse.ArgumentParser(
        prog='racglattice',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description='''Certified right-angled polygon groups in O(Q_{n+1}; Z)

The 'racglattice' program builds, in exact arithmetic, the reflections of
the integral Lorentzian forms Q_{n+1} and Q'_{n+1}, assembles right-angled
polygon subgroups from them and writes certificate bundles whose every
claim can be checked again from the stored matrices.

Exit codes are 0 when all the certificates pass, 1 when a certificate
fails, 2 on a usage or file format error and 3 when the search for a
translation power exhausts its bound.''',
        epilog='''
Examples:

* Build and check the hexagon group of Q_4

   $ racglattice build --n 3 --variant polygon2n --out hexagon.json
   $ racglattice verify hexagon.json

* Draw its circles

   $ racglattice viz hexagon.json --out svg -o hexagon.svg
        ''')

    # general arguments
    parser.add_argument(
        '-V', '--version',
        action='store_true',
        help='show version information and exit.')

    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='write all log messages to stderr '
        '(displays only warnings by default).')
    group.add_argument(
        '-q', '--quiet',
        action='store_true',
        help='do not display any log message, even warnings.')

    subparsers = parser.add_subparsers(dest='command', metavar='<command>')

    subparser = subparsers.add_parser(
        'build', help='build a certificate bundle')
    subparser.add_argument(
        '--n', type=int, required=True, metavar='<int>',
        help='dimension of the hyperbolic space, the matrices are '
        '(n+1) x (n+1).')
    subparser.add_argument(
        '--variant', default='polygon2n', choices=sorted(CLI_VARIANTS),
        help='the construction to build, default is %(default)s.')
    subparser.add_argument(
        '--max-power', type=int, default=None, metavar='<int>',
        help='''bound on the power of the translation, default to the
        RACGLATTICE_MAX_POWER environment variable or 64.''')
    subparser.add_argument(
        '--out', default=None, metavar='<file>',
        help='bundle file to write, default is <variant>-n<n>.json.')

    subparser = subparsers.add_parser(
        'verify', help='recompute the certificates of a bundle file')
    subparser.add_argument('path', metavar='<file>', help='bundle file')

    subparser = subparsers.add_parser(
        'viz', help='spheres and hyperplanes of a bundle at infinity')
    subparser.add_argument('path', metavar='<file>', help='bundle file')
    subparser.add_argument(
        '--out', default='svg', choices=['svg', 'json'],
        help='''output format, default is %(default)s. SVG is only available
        for n = 3, JSON is written otherwise.''')
    subparser.add_argument(
        '-o', '--output', default=None, metavar='<file>',
        help='output file, if not specified write to stdout.')

    subparser = subparsers.add_parser(
        'selftest', help='run the acceptance suite')
    subparser.add_argument(
        '--quick', action='store_true',
        help='limit the 2n-gon builds to n = 3..5.')
    subparser.add_argument(
        '-j', '--njobs', type=int, metavar='<int>', default=1,
        help='number of parallel jobs, default is %(default)s.')

    subparsers.add_parser('list', help='list the available variants')

    return parser, parser.parse_args(argv)


def get_logger(verbose, quiet):
    """Returns a configured logger"""
    verbosity = 'normal'
    if verbose:
        verbosity = 'verbose'
    elif quiet:
        verbosity = 'quiet'
    return logger.get_logger(verbosity=verbosity)


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        bundlefile.write_text(text, path)


def cmd_build(args, log):
    """Builds a bundle, writes it and prints one line per certificate"""
    bundle = build(
        args.n, variant=args.variant, max_power=args.max_power, logger=log)

    path = args.out or f'{args.variant}-n{args.n}.json'
    bundlefile.write_bundle(bundle, path)
    log.info('wrote %s', path)

    for certificate in bundle.certificates:
        print(f'{certificate.status:<5} {certificate.id:<30} '
              f'{certificate.evidence}')

    if any(c.id == 'power-search' for c in bundle.failed):
        log.error('no translation power up to the bound gives a polygon')
        return 3
    return 0 if bundle.passed else 1


def cmd_verify(args, log):
    """Recomputes the certificates of a bundle file"""
    bundle = bundlefile.read_bundle(args.path)
    report = verify(bundle, logger=log)

    stored = {c.id: c.status for c in report.stored}
    for certificate in report.recomputed:
        flag = ' MISMATCH' if certificate.id in report.mismatches else ''
        print(f'{certificate.status:<5} {certificate.id:<30} '
              f'stored={stored.get(certificate.id, "missing")}{flag} '
              f'{certificate.evidence}')
    for identifier in report.mismatches:
        if identifier not in {c.id for c in report.recomputed}:
            print(f'{"-":<5} {identifier:<30} stored={stored[identifier]} '
                  f'MISMATCH unknown certificate')

    if not report.passed:
        log.error(
            'bundle rejected: %s',
            ', '.join(report.failed + report.mismatches))
        return 1
    return 0


def cmd_viz(args, log):
    """Writes the spheres of a bundle as SVG (n = 3) or JSON"""
    bundle = bundlefile.read_bundle(args.path)
    form = QuadraticForm(bundle.form)
    failed = {c.id for c in bundle.failed}
    if not form.is_lorentzian or 'signature' in failed:
        log.error(
            'the form has signature %s, it has no boundary chart',
            form.signature)
        return 1

    spheres = bundle_spheres(bundle)
    if not spheres.configuration.consistent:
        log.warning(
            'float inversive products deviate from the Gram matrix by %s',
            spheres.configuration.max_residual)

    if args.out == 'svg' and spheres.configuration.dimension == 2:
        _write(svg.to_string(spheres), args.output)
    else:
        if args.out == 'svg':
            log.warning(
                'SVG is only available for n = 3, writing JSON instead')
        _write(bundlefile.spheres_dumps(spheres), args.output)
    return 0


def cmd_selftest(args, log):
    """Runs the acceptance suite and prints a table of the criteria"""
    criteria = selftest.run_selftest(
        quick=args.quick, logger=log, njobs=args.njobs)
    for criterion in criteria:
        print(criterion)
    return 0 if all(c.passed for c in criteria) else 1


def list_variants():
    """Returns the available variants as a str"""
    return '\n'.join(
        f'{cls.cli_name()}\t->\t{name}: {cls.description()}'
        for name, cls in BUILDERS.items())


@CatchExceptions
def main(argv=None):
    """Run racglattice from command-line arguments, returns the exit code"""
    parser, args = parse_args(argv)

    # display version information and exit
    if args.version:
        print(version.version())
        return 0

    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    if args.command == 'list':
        print(list_variants())
        return 0

    # configure logging according to --verbose/--quiet options
    log = get_logger(args.verbose, args.quiet)

    return {
        'build': cmd_build,
        'verify': cmd_verify,
        'viz': cmd_viz,
        'selftest': cmd_selftest}[args.command](args, log)


if __name__ == '__main__':  # pragma: nocover
    sys.exit(main())
