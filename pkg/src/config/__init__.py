"""
Configuration module.
"""
