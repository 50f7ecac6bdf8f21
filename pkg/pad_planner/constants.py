#!/usr/bin/env python3

# PAD fluents
PLEASURE  = "pleasure"
AROUSAL   = "arousal"
DOMINANCE = "dominance"
PAD_FLUENTS = (PLEASURE, AROUSAL, DOMINANCE)
PAD_MIN = -1.0
PAD_MAX = 1.0

# Types
ROOT_TYPE  = "object"
CHILD_TYPE = "child"

# Special predicates
NOT_BUSY = "not_busy"

# Durations
DURATION_VAR = "?duration"
FIXED         = "="
UPPER_BOUNDED = "<="

# Time
DEFAULT_EPSILON   = 0.001
DEFAULT_GRID_STEP = 5.0
DEFAULT_TIMEOUT   = 60.0
DEFAULT_SEED      = 0
DEFAULT_DT        = 1.0
# Absorbs float noise from 3-decimal plan files
TIME_TOLERANCE    = 1e-6

# Emotion model
DEFAULT_CUT         = 0.5
DEFAULT_HARD_FLOOR  = 0.0
DEFAULT_DEGRADATION = 0.001
KID_GIVE_RATE       = 0.005

# Heuristic weights
GOAL_WEIGHT    = 10.0
RELAXED_WEIGHT = 1.0
DEFICIT_WEIGHT = 1.0

# Exit codes
EXIT_OK      = 0
EXIT_FAILURE = 1
EXIT_USAGE   = 2

# Chart colors
BLACK       = (1  , 1  , 1  , 255)
WHITE       = (255, 255, 255, 255)
RED         = (255, 0  , 0  , 255)
NAVY        = (0  , 0  , 127, 255)
EMERALD     = (0  , 127, 0  , 255)
ORANGE      = (255, 127, 0  , 255)
PURPLE      = (127, 0  , 255, 255)
TEAL        = (0  , 127, 127, 255)
SERIES_COLORS = (NAVY, RED, EMERALD, ORANGE, PURPLE, TEAL)
