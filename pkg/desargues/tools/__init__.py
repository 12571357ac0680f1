#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
import argparse
import logging
import sys
import traceback
from enum import IntEnum

from desargues import translate_gettext as _
from desargues.fuzzing import DEFAULT_BOUND, DEFAULT_SEED
from desargues.system_utils import setup_logging, package_path

toolname = 'desargues-cli'

_logger = logging.getLogger('desargues')


class ExitCode(IntEnum):
    """ Process exit status of every tool. """
    PASS = 0
    FAILURE = 1  # Theorem falsification or failed assertion.
    USAGE = 2  # Bad arguments, parse errors, invalid fuzz spec.
    IO_ERROR = 3


class ToolEnvironmentObject(object):
    """ Tool environment configuration object """

    command = None
    examples_dir = None
    default_bound = DEFAULT_BOUND
    default_seed = DEFAULT_SEED
    json = False

    def __init__(self, items):
        """
        :param items: dict of config key value pairs
        """
        for k, v in items.items():
            self.__dict__[k] = v

    def cleanup(self):
        """ Clean up or close everything we need to """
        for handler in _logger.handlers:
            handler.flush()


class ToolContextManager(object):
    """
    A processing context manager for cli tools
    """
    _command = None
    _env = None

    _env_config_obj = None

    def __init__(self, command, args):
        """
        Initialize Tool Context Manager
        :param command: command name
        :param args: parsed argparser commandline arguments object.
        """
        if not command:
            _logger.error(_('command not set, aborting.'))
            exit(ExitCode.USAGE)

        self._command = command
        # The Environment dict is where we can setup any information related to all tools.
        self._env = {
            'command': command,
            'examples_dir': package_path('examples'),
            'default_bound': DEFAULT_BOUND,
            'default_seed': DEFAULT_SEED,
            'json': bool(getattr(args, 'json', False)),
        }

    def __enter__(self):
        """ Return object with properties set to config values """
        self._env_config_obj = ToolEnvironmentObject(self._env)
        return self._env_config_obj

    def __exit__(self, exc_type, exc_val, exc_tb):
        """ Clean up or close everything we need to """
        self._env_config_obj.cleanup()

        if exc_type is not None and not issubclass(exc_type, SystemExit):
            _logger.error(''.join(traceback.format_exception(exc_type, exc_val, exc_tb)))
            _logger.error(_('tool encountered an unexpected error, quitting.'))
            exit(ExitCode.FAILURE)

    @staticmethod
    def initialize_logging(tool_cmd, argv=None):
        """
        Console logging goes to stdout, or to stderr when the tool writes JSON to stdout.
        :param tool_cmd: Tool command line id.
        :param argv: argument list, defaults to sys.argv.
        """
        argv = sys.argv if argv is None else argv
        setup_logging(
            _logger, tool_cmd, '--debug' in argv, '-q' in argv or '--quiet' in argv,
            '{0}.log'.format(tool_cmd) if '--log-file' in argv else None,
            stream=sys.stderr if '--json' in argv else sys.stdout)

    @staticmethod
    def get_argparser(tool_cmd, tool_desc):
        """
        :param tool_cmd: Tool command line id.
        :param tool_desc: Tool description.
        """
        # Setup program arguments.
        parser = argparse.ArgumentParser(prog=tool_cmd, description=tool_desc)
        parser.add_argument('--debug', help=_('enable debug output'), default=False, action='store_true')
        parser.add_argument('--log-file', help=_('write output to a log file'), default=False, action='store_true')
        parser.add_argument('-q', '--quiet', help=_('suppress normal output'), default=False, action='store_true')
        return parser
