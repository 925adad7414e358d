class DegenerateSpectrum(Exception):
    pass
