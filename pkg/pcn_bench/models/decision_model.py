from enum import Enum


class MeterDecision(str, Enum):
    """
    Verdict a meter renders for one arriving packet
    """
    FORWARD = 'Forward'
    MARK = 'Mark'
    DROP = 'Drop'
