from .strand import StrandResult, is_strongly_linear_matrix, strongly_linear_strand
