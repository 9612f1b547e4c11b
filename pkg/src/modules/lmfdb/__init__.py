"""Módulo lmfdb."""
