from models.records import OracleReport


def compare(name: str, reference_value: float, candidate_value: float) -> OracleReport:
    return OracleReport(name=name, reference_value=float(reference_value),
                        candidate_value=float(candidate_value))
