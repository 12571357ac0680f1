#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Tool for fuzzing theorem instances with the deterministic SplitMix64 generator.
#
import logging
import os
import sys

from desargues import translate_gettext as _
from desargues.exceptions import FuzzSpecError
from desargues.fuzzing import THEOREM_NAMES, THEOREMS, FuzzSpec, FuzzSummary, run_fuzz, validate_fuzz_spec, \
    validate_config, validate_config_base
from desargues.system_utils import JSONObject, print_progress_bar, tc as _tc
from desargues.tools import ToolContextManager, ToolEnvironmentObject, ExitCode

_logger = logging.getLogger('desargues')

# Tool_cmd and tool_desc name are required.
tool_cmd = _('fuzz')
tool_desc = _('check generated theorem instances exactly, reproducibly from a seed.')


class FuzzClass(object):
    """ Tool class for running fuzz campaigns. """

    def __init__(self, args, env: ToolEnvironmentObject, spec: FuzzSpec):
        """
        :param args: command line arguments.
        :param env: tool environment information.
        :param spec: validated fuzz specification.
        """
        self.args = args
        self.env = env
        self.spec = spec

    def log_summary(self, summary: FuzzSummary):
        spec = self.spec
        _logger.info(_tc.fmt(f'{spec.theorem}', _tc.bold) + ': ' + _('trials') + f' {summary.trials}, ' +
                     _('seed') + f' {spec.seed}, ' + _('bound') + f' {spec.bound}, ' +
                     _('rejections') + f' {summary.rejections}.')
        check = THEOREMS[spec.theorem]
        for name, passed in summary.pass_counts.items():
            seen = summary.seen_counts[name]
            if name in check.required:
                role = _('theorem')
            elif name in check.findings:
                role = _('finding')
            else:
                role = _('reported')
            _logger.info(f'  {name.ljust(36)} {str(passed).rjust(6)}/{seen}  ({role})')
        if summary.findings:
            _logger.warning(f'{summary.findings} ' + _('finding(s) surfaced, see the warnings above.'))
        if summary.passed:
            _logger.info(_tc.fmt(_('no falsifications.'), _tc.fg_bright_green))
        else:
            _logger.error(f'{summary.falsifications} ' + _('falsification(s).'))

    def run(self):
        """
        Main program process
        :return: Exit code value
        """
        check = THEOREMS[self.spec.theorem]
        summary = FuzzSummary(self.spec)
        progress = not self.env.json and not self.args.quiet and sys.stderr.isatty()

        try:
            for record in run_fuzz(self.spec, self.args.jobs):
                summary.add(record)
                if self.env.json:
                    print(record.to_json())
                if record.falsified(check):
                    failed = [n for n in check.required if record.verdicts.get(n) is False]
                    _logger.error(_('Falsified') + f' {", ".join(failed)} ' + _('in trial') +
                                  f' {record.index} (' + _('seed') + f' {record.seed}): ' +
                                  ', '.join(f'{k}={v}' for k, v in record.points.items()))
                for name in record.findings(check):
                    _logger.warning(_('Finding') + f': {name} ' + _('is false in trial') + f' {record.index}.')
                if progress:
                    print_progress_bar(record.index + 1, self.spec.trials, prefix=self.spec.theorem)
        except FuzzSpecError as e:
            _logger.error(str(e))
            return ExitCode.USAGE

        if self.env.json:
            print(summary.to_json())
        else:
            self.log_summary(summary)
        return ExitCode.PASS if summary.passed else ExitCode.FAILURE


def _load_config(path):
    """
    Load a 'fuzz-spec' JSON configuration file.
    :return: JSONObject, or an ExitCode on failure.
    """
    if not os.path.exists(path):
        _logger.error(_('Unable to find configuration file specified in argument.'))
        return ExitCode.IO_ERROR
    config = validate_config_base(path, ['fuzz-spec'])
    if not config or not validate_config(config, 'fuzz-spec.schema'):
        return ExitCode.USAGE
    return JSONObject(config)


def run(argv=None):
    # Set global debug value and setup application logging.
    ToolContextManager.initialize_logging(tool_cmd, argv)
    parser = ToolContextManager.get_argparser(tool_cmd, tool_desc)

    parser.add_argument('--theorem', help=_('theorem to fuzz'), choices=THEOREM_NAMES, default=None)
    parser.add_argument('--trials', help=_('number of trials'), type=int, default=None)
    parser.add_argument('--seed', help=_('unsigned 64-bit campaign seed, default 0'), type=int, default=None)
    parser.add_argument('--bound', help=_('integer coordinate bound of sampled points'), type=int, default=None)
    parser.add_argument('--config', help=_('read the fuzz specification from a JSON file'), type=str,
                        default=None, metavar='CONFIG-FILE')
    parser.add_argument('--jobs', help=_('number of worker processes'), type=int, default=1)
    parser.add_argument('--json', help=_('write JSON trial records and a summary to stdout'), default=False,
                        action='store_true')

    args = parser.parse_args(argv)

    config = JSONObject(None)
    if args.config:
        # Always force absolute path for config files.
        config = _load_config(os.path.abspath(args.config))
        if isinstance(config, ExitCode):
            return int(config)

    # Command line values override the configuration file.
    values = {name: getattr(args, name) if getattr(args, name) is not None else config.get(name)
              for name in ('theorem', 'trials', 'seed', 'bound')}
    if values['seed'] is None:
        values['seed'] = ToolEnvironmentObject.default_seed
    if values['bound'] is None:
        values['bound'] = ToolEnvironmentObject.default_bound
    missing = [name for name in ('theorem', 'trials') if values[name] is None]
    if missing:
        _logger.error(_('Missing fuzz specification value(s)') + f': {", ".join(missing)}.')
        return int(ExitCode.USAGE)
    if args.jobs < 1:
        _logger.error(_('The --jobs argument must be at least 1.'))
        return int(ExitCode.USAGE)

    try:
        spec = validate_fuzz_spec(FuzzSpec(**values))
    except FuzzSpecError as e:
        _logger.error(_('Invalid fuzz specification') + f': {e}')
        return int(ExitCode.USAGE)

    with ToolContextManager(tool_cmd, args) as tool_env:
        process = FuzzClass(args, tool_env, spec)
        exit_code = process.run()
        return int(exit_code)


# --- Main Program Call ---
if __name__ == "__main__":
    sys.exit(run())
