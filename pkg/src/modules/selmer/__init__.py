"""Módulo selmer."""
