"""Módulo ctp."""
