from . import factor, ring, scheme, quotient, tiles, code, sweep

# Registration order is the order shown in --help
COMMANDS = (factor, ring, scheme, quotient, tiles, code, sweep)
