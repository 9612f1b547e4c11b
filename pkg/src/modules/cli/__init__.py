"""Módulo cli."""
