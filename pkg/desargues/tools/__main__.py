#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Search for and run command line tools.
#
import copy
import glob
import importlib
import os
import re
import sys

from desargues import translate_gettext as _
from desargues.tools import toolname, ExitCode


def _grep_prop(filename, prop_name):
    """
    Look for property in file
    :param filename: path to file and file name.
    :param prop_name: property to search for in file.
    :return: property value or None.
    """
    with open(filename, "r", encoding="utf-8") as h:
        fdata = h.read()
    obj = re.search(r"^{0} = _?\(?['\"](.+?)['\"]\)?$".format(prop_name), fdata, re.MULTILINE)
    if obj:
        return obj.group(1)
    return None


def _run_tool(tools_dir, import_path):
    """
    Run the tool named by the first command line argument.
    :param tools_dir: directory holding the tool modules.
    :param import_path: python package path of the tool modules.
    """
    args = copy.deepcopy(sys.argv)

    show_usage = False
    command = "no-command"

    # If help is select lets build a list of commands to show
    if len(sys.argv) == 1 or "--help" == sys.argv[1] or "-h" == sys.argv[1]:
        show_usage = True

    # If not showing help, get the command name and then we'll call it.
    if not show_usage:
        command = args.pop(1)
        sys.argv = args

    command_names = list()

    libs = sorted(glob.glob(os.path.join(tools_dir, "*.py")))
    for lib in libs:
        mod_cmd = _grep_prop(lib, "tool_cmd")
        mod_desc = _grep_prop(lib, "tool_desc")
        if not mod_cmd:
            continue

        if show_usage:
            command_names.append("  {0} : {1}".format(mod_cmd.ljust(14), mod_desc))
        elif mod_cmd == command:
            mod_name = os.path.basename(lib).split(".")[0]
            mod = importlib.import_module("{0}.{1}".format(import_path, mod_name))
            exit_code = mod.run()
            quiet = '-q' in sys.argv or '--quiet' in sys.argv
            if exit_code == ExitCode.PASS and not quiet and '--json' not in sys.argv:
                print(_('finished.'))
            return exit_code

    if show_usage:
        _tool = toolname if toolname in sys.argv[0] else 'python -m desargues.tools'
        _usage = _('usage')
        _command = _('command')
        _short_help = _('-h')
        _long_help = _('--help')
        _args = _('args')
        _commands = _('available commands')

        print(f"\n{_usage}: {_tool} [{_command}] " +
              f"[{_short_help}|{_long_help}] [{_args}]\n\n{_commands}:")

        for gn in command_names:
            print(gn)
        print("")
        return ExitCode.PASS

    print(_('ERROR: unknown command') + f' "{command}".', file=sys.stderr)
    return ExitCode.USAGE


def run():
    """
    Geometry Tools
    """
    return _run_tool(os.path.dirname(os.path.abspath(__file__)), "desargues.tools")


# --- Main Program Call ---
if __name__ == "__main__":
    sys.exit(run())
