"""Translated report messages."""

import gettext
import locale
import os

_podir = os.path.join(os.path.dirname(__file__), "po")
translation = gettext.translation("SMotzkin", _podir, fallback=True)

LOCALES = {
    ("ru_RU", "UTF-8"): gettext.translation("SMotzkin", _podir, ["ru_RU.UTF-8"], fallback=True),
    ("en_US", "UTF-8"): gettext.NullTranslations(),
}


def _(text):
    return LOCALES.get(locale.getlocale(), translation).gettext(text)
