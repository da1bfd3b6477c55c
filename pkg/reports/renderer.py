"""
Render command output from jinja2 templates
"""
import logging
from pathlib import Path

import jinja2

from certify.table import format_thirds

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent / 'templates'

# Jinja2 template environment
template_loader = jinja2.FileSystemLoader(searchpath=str(TEMPLATE_DIR))
template_env = jinja2.Environment(
    loader=template_loader,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=jinja2.StrictUndefined,
)
template_env.filters['thirds'] = format_thirds
template_env.filters['yesno'] = lambda flag: 'ok' if flag else 'FAILED'


def render(template_name: str, **context) -> str:
    template = template_env.get_template(template_name)
    return template.render(**context)
