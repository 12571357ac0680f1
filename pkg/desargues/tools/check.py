#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Tool for checking `.geo` construction files.
#
import json
import logging
import os
import sys

from desargues import translate_gettext as _
from desargues.dsl import parse, evaluate, EvalReport, Program
from desargues.dsl.parser import format_statement
from desargues.exceptions import GeoParseError, GeoSyntaxError
from desargues.geometry import ProjPoint
from desargues.system_utils import tc as _tc
from desargues.tools import ToolContextManager, ToolEnvironmentObject, ExitCode

_logger = logging.getLogger('desargues')

# Tool_cmd and tool_desc name are required.
tool_cmd = _('check')
tool_desc = _('parse and evaluate a .geo construction file exactly.')


class LoadedProgram(object):
    """ Outcome of reading, parsing and evaluating one file. """

    def __init__(self, path):
        self.path = path
        self.source = None
        self.program: Program = None
        self.report: EvalReport = None
        self.parse_error: GeoParseError = None
        self.io_error: OSError = None

    @property
    def exit_code(self) -> ExitCode:
        if self.io_error:
            return ExitCode.IO_ERROR
        if self.parse_error:
            return ExitCode.USAGE
        return ExitCode.PASS if self.report.ok else ExitCode.FAILURE


def load_program(path) -> LoadedProgram:
    """
    Read, parse and evaluate a construction file, keeping every failure in the result.
    :param path: path to a `.geo` file.
    """
    loaded = LoadedProgram(path)
    try:
        with open(path, 'rb') as h:
            loaded.source = h.read()
    except OSError as e:
        loaded.io_error = e
        return loaded

    try:
        loaded.program = parse(loaded.source)
    except GeoParseError as e:
        loaded.parse_error = e
        return loaded

    loaded.report = evaluate(loaded.program)
    return loaded


def _span_dict(span) -> dict:
    return {'line': span.line, 'column': span.column, 'end_column': span.end_column}


def _triple(value):
    return [str(c) for c in value.coords]


def report_to_dict(loaded: LoadedProgram) -> dict:
    """ Machine readable report, see 'check-report.schema'. """
    data = {'file': str(loaded.path), 'ok': loaded.exit_code == ExitCode.PASS}
    if loaded.io_error:
        data['io_error'] = str(loaded.io_error)
        return data
    if loaded.parse_error:
        error = loaded.parse_error
        data['parse_error'] = {'span': _span_dict(error.span), 'message': error.message}
        if isinstance(error, GeoSyntaxError):
            data['parse_error']['expected'] = list(error.expected)
        return data

    report = loaded.report
    data['bindings'] = {name: {'kind': 'point' if isinstance(value, ProjPoint) else 'line', 'value': _triple(value)}
                        for name, value in report.bindings.items()}
    data['assertions'] = [{
        'span': _span_dict(result.span),
        'kind': result.kind.value,
        'verdict': result.verdict,
        'witness': [_triple(w) for w in result.witness],
        'error': result.error.message if result.error else None,
    } for result in report.results]
    data['errors'] = [{'span': _span_dict(e.span), 'name': e.name, 'message': e.message} for e in report.errors]
    return data


class CheckClass(object):
    """ Tool class for checking construction files. """

    def __init__(self, args, env: ToolEnvironmentObject):
        """
        :param args: command line arguments.
        :param env: tool environment information.
        """
        self.args = args
        self.env = env

    def resolve_path(self, path):
        """
        Fall back to the bundled examples directory for a bare file name like 'fig1.geo'.
        :param path: path argument.
        """
        if os.path.exists(path) or os.path.dirname(path):
            return path
        bundled = os.path.join(self.env.examples_dir, path)
        if os.path.exists(bundled):
            _logger.debug(_('using bundled example') + f' {bundled}')
            return bundled
        return path

    def log_report(self, loaded: LoadedProgram):
        """ Human readable report through the logger. """
        if loaded.io_error:
            _logger.error(f'{loaded.path}: ' + _('unable to read file') + f' ({loaded.io_error.strerror}).')
            return
        if loaded.parse_error:
            _logger.error(f'{loaded.path}:{loaded.parse_error}')
            return

        _logger.info(_tc.fmt(loaded.path, _tc.bold))
        for statement, result in zip(loaded.program.assertions, loaded.report.results):
            text = format_statement(statement)
            line = f'  {str(result.span).ljust(7)} {text.ljust(44)} {_tc.verdict(result.verdict)}'
            if result.error:
                line += f'  {result.error.message}'
            elif result.witness:
                label = _('witness') if result.verdict else _('counterexample')
                line += f'  {label} ' + ', '.join(str(w) for w in result.witness)
            _logger.info(line)

        for error in loaded.report.errors:
            _logger.error(f'{loaded.path}:{error}')

        failed = len(loaded.report.failed)
        if loaded.report.ok:
            _logger.info(_('all assertions hold') + f' ({len(loaded.report.results)}).')
        else:
            _logger.warning(f'{failed} ' + _('assertion(s) failed or could not be evaluated') +
                            f', {len(loaded.report.errors)} ' + _('evaluation error(s).'))

    def run(self):
        """
        Main program process
        :return: Exit code value
        """
        exit_code = ExitCode.PASS
        documents = list()
        for path in self.args.files:
            loaded = load_program(self.resolve_path(path))
            if self.env.json:
                documents.append(report_to_dict(loaded))
            else:
                self.log_report(loaded)
            exit_code = max(exit_code, loaded.exit_code)

        if self.env.json:
            print(json.dumps(documents[0] if len(documents) == 1 else documents, indent=2, ensure_ascii=False))
        return exit_code


def run(argv=None):
    # Set global debug value and setup application logging.
    ToolContextManager.initialize_logging(tool_cmd, argv)
    parser = ToolContextManager.get_argparser(tool_cmd, tool_desc)

    parser.add_argument('files', help=_('construction files to check'), nargs='+', metavar='FILE.geo')
    parser.add_argument('--json', help=_('write a machine readable report to stdout'), default=False,
                        action='store_true')

    args = parser.parse_args(argv)

    with ToolContextManager(tool_cmd, args) as tool_env:
        process = CheckClass(args, tool_env)
        exit_code = process.run()
        return int(exit_code)


# --- Main Program Call ---
if __name__ == "__main__":
    sys.exit(run())
