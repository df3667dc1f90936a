# Gaussian integers, quotient rings, schemes, tilings and constellations
