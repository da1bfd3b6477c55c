"""
Configuration package for the Latin square balance toolkit
"""
