from flask import Flask, jsonify, request

import multibgg
from multibgg.errors import AlgebraicError, SchemaError
from multibgg.jobs import JOBS, JobSpec, KEYS

app = Flask(__name__)


@app.route('/')
def list_jobs():
    """The job registry: one entry per command with the payload fields it reads."""
    return jsonify({key.value: {"title": job.title,
                                "description": job.short_description,
                                "payload": job.payload}
                    for key, job in JOBS.items()})


@app.route('/jobs/<command>', methods=['POST'])
def run_job(command: KEYS):
    """
    Body: a JobSpec document (the "command" field may be left out). Query
    string parameters are added to the options, e.g. ?max_iter=4.
    """
    doc = request.get_json(silent=True)
    if not isinstance(doc, dict):
        return jsonify(error="expected a JSON object body"), 400
    try:
        spec = JobSpec.from_json({**doc, "command": command})
        for key, value in request.args.items():
            spec.options[key] = value
        report = multibgg.main(spec.command, spec.ring, spec.payload, spec.options)
    except SchemaError as e:
        return jsonify(error=str(e), pointer=e.pointer), 400
    except AlgebraicError as e:
        return jsonify(error=str(e), kind=type(e).__name__), 422
    return jsonify(report.to_json())


if __name__ == '__main__':
    app.run(debug=True)  # starts the Flask web server.
