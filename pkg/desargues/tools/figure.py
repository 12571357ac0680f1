#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Tool for drawing `.geo` construction files as SVG figures.
#
import logging
import os
import sys

from desargues import translate_gettext as _
from desargues.render import write_svg
from desargues.tools import ToolContextManager, ToolEnvironmentObject, ExitCode
from desargues.tools.check import load_program

_logger = logging.getLogger('desargues')

# Tool_cmd and tool_desc name are required.
tool_cmd = _('figure')
tool_desc = _('render a .geo construction file as an SVG figure.')


class FigureClass(object):
    """ Tool class for rendering construction files. """

    def __init__(self, args, env: ToolEnvironmentObject):
        """
        :param args: command line arguments.
        :param env: tool environment information.
        """
        self.args = args
        self.env = env

    def run(self):
        """
        Main program process
        :return: Exit code value
        """
        loaded = load_program(self.args.file)
        if loaded.io_error:
            _logger.error(f'{self.args.file}: ' + _('unable to read file') + f' ({loaded.io_error.strerror}).')
            return ExitCode.IO_ERROR
        if loaded.parse_error:
            _logger.error(f'{self.args.file}:{loaded.parse_error}')
            return ExitCode.USAGE
        if loaded.report.errors:
            for error in loaded.report.errors:
                _logger.error(f'{self.args.file}:{error}')
            _logger.error(_('File does not evaluate cleanly, no figure written.'))
            return ExitCode.FAILURE

        title = os.path.basename(self.args.file)
        try:
            write_svg(loaded.report.bindings, self.args.output, title=title)
        except OSError as e:
            _logger.error(f'{self.args.output}: ' + _('unable to write figure') + f' ({e.strerror}).')
            return ExitCode.IO_ERROR
        _logger.info(_('wrote figure') + f' {self.args.output}.')

        # The figure is still written when assertions fail, the exit status reports them.
        failed = loaded.report.failed
        if failed:
            _logger.warning(f'{len(failed)} ' + _('assertion(s) failed.'))
            return ExitCode.FAILURE
        return ExitCode.PASS


def run(argv=None):
    # Set global debug value and setup application logging.
    ToolContextManager.initialize_logging(tool_cmd, argv)
    parser = ToolContextManager.get_argparser(tool_cmd, tool_desc)

    parser.add_argument('file', help=_('construction file to draw'), metavar='FILE.geo')
    parser.add_argument('-o', '--output', help=_('SVG output file'), required=True, metavar='OUT.svg')

    args = parser.parse_args(argv)

    with ToolContextManager(tool_cmd, args) as tool_env:
        process = FigureClass(args, tool_env)
        exit_code = process.run()
        return int(exit_code)


# --- Main Program Call ---
if __name__ == "__main__":
    sys.exit(run())
