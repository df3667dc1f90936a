# Association schemes on Z[i]/αZ[i]
__version__ = "1.0.0"
