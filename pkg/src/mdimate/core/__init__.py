"""Numeric engines: tensor algebra, states, witnesses, the game, channels and thresholds."""
