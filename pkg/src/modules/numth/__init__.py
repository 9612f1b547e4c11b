"""Módulo numth."""
