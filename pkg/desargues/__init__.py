#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Enable i18n internationalization support for python
#
import gettext
import os

_locale_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'locale')
translate = gettext.translation('desargues', _locale_dir, fallback=True)
translate_gettext = translate.gettext

__version__ = '0.2.0'
