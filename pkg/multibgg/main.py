"""
Batch entry point shared by the command line and the Flask app: a JobSpec
goes in, a Report comes out.
"""
from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.errors import SchemaError
from multibgg.jobs import JOBS, JobMetaData, JobSpec, KEYS
from reports import Report

logger = get_logger('multibgg.main')


def run_job(job: JobMetaData, ring, payload: dict, params: MultiDict = None) -> Report:
    if params is None:
        params = MultiDict()

    computation = job.class_(ring, payload, params)
    computation.prepare()
    computation.run()

    report = computation.extract_report()
    if report.truncated:
        logger.warning("%s stopped early; the result is partial", report.command)
    return report


def main(command: KEYS, ring, payload: dict, params: MultiDict = None) -> Report:
    job = JOBS.get(command)
    if job is None:
        raise SchemaError(f"Unknown command: {command}", "/command")

    return run_job(job, ring, payload, params)


def run_spec(spec: JobSpec) -> Report:
    return main(spec.command, spec.ring, spec.payload, spec.options)
