"""Glued semigroup toolkit: fibers, presentations, gluing detection and construction"""
__version__ = "1.0.0"
