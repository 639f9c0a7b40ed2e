"""Routing and wavelength assignment on 4-regular circulant networks C_n(1, s)."""
