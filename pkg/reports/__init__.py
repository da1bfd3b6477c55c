"""
Reports package: text rendering of results through jinja2 templates
"""
