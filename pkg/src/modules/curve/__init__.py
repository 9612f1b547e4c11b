"""Módulo curve."""
