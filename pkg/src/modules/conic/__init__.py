"""Módulo conic."""
