# Command-line surface, reports and corpus survey