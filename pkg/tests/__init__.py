# Tests package initialization file
