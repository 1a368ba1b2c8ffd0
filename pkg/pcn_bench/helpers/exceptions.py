class PcnBenchBaseException(Exception):
    """
    Base exception
    """
    code: int = 500


class PcnBenchBadRequestException(PcnBenchBaseException):
    """
    Incoming parameters are invalid: malformed configuration, unknown keys or
    values outside an operation's domain.
    """
    code = 400


class PcnBenchConflictException(PcnBenchBaseException):
    """
    Requested change is incompatible with the current state of an entity,
    e.g. an illegal flow state transition
    """
    code = 409


class PcnBenchConfigurationException(PcnBenchBaseException):
    """
    Environment is not configured properly: General configuration mismatch
    """
    code = 503


class PcnBenchInternalException(PcnBenchBaseException):
    """
    Simulation kernel invariant has been broken. It's a developer's mistake.
    """
    code = 500


class PcnBenchScenarioException(PcnBenchBaseException):
    """
    One scenario of a benchmark matrix failed to run
    """
    code = 500

    def __init__(self, technique: str, bandwidth_bps: int, seed: int,
                 reason: str):
        self.technique = technique
        self.bandwidth_bps = bandwidth_bps
        self.seed = seed
        super().__init__(
            f'Scenario technique={technique} bandwidth_bps={bandwidth_bps} '
            f'seed={seed} failed: {reason}'
        )
