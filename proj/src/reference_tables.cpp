// Generated benchmark values for the standard simulation grid; used by
// the replication reports and the acceptance checks.  Do not edit by
// hand.  Layout documented in geepress/reference.hpp.

#include "geepress/reference.hpp"

namespace geepress::reference {

const double kSelection[8][3][2][7][4] = {
  {
    {
      {
        {0.028, 0.089, 0.028, 0.859},
        {0.03, 0.181, 0.366, 0.474},
        {0.04, 0.364, 0.397, 0.199},
        {0.115, 0.238, 0.108, 0.547},
        {0.087, 0.24, 0.393, 0.309},
        {0.05, 0.27, 0.391, 0.295},
        {0.259, 0.327, 0.213, 0.203},
      },
      {
        {0.017, 0.062, 0.025, 0.9},
        {0.006, 0.165, 0.421, 0.5},
        {0.031, 0.324, 0.417, 0.228},
        {0.105, 0.225, 0.105, 0.57},
        {0.051, 0.269, 0.343, 0.361},
        {0.027, 0.277, 0.343, 0.363},
        {0.268, 0.298, 0.209, 0.227},
      },
    },
    {
      {
        {0.018, 0.038, 0.076, 0.868},
        {0.002, 0.026, 0.541, 0.452},
        {0.028, 0.218, 0.582, 0.172},
        {0.156, 0.109, 0.218, 0.519},
        {0.014, 0.099, 0.535, 0.36},
        {0.007, 0.048, 0.585, 0.372},
        {0.305, 0.335, 0.209, 0.152},
      },
      {
        {0.013, 0.026, 0.043, 0.924},
        {0, 0.002, 0.555, 0.496},
        {0.038, 0.314, 0.489, 0.159},
        {0.126, 0.076, 0.212, 0.588},
        {0, 0.028, 0.544, 0.45},
        {0, 0.01, 0.566, 0.432},
        {0.25, 0.386, 0.228, 0.136},
      },
    },
    {
      {
        {0.029, 0.077, 0.042, 0.856},
        {0.008, 0.12, 0.443, 0.471},
        {0.034, 0.342, 0.447, 0.178},
        {0.152, 0.188, 0.138, 0.526},
        {0.049, 0.258, 0.398, 0.308},
        {0.025, 0.222, 0.467, 0.296},
        {0.289, 0.348, 0.192, 0.172},
      },
      {
        {0.017, 0.05, 0.017, 0.918},
        {0.003, 0.089, 0.492, 0.481},
        {0.046, 0.327, 0.411, 0.216},
        {0.121, 0.204, 0.125, 0.556},
        {0.011, 0.231, 0.411, 0.375},
        {0.007, 0.171, 0.454, 0.376},
        {0.274, 0.32, 0.195, 0.212},
      },
    },
  },
  {
    {
      {
        {0.009, 0.209, 0.027, 0.757},
        {0.002, 0.234, 0.471, 0.317},
        {0.03, 0.421, 0.448, 0.102},
        {0.105, 0.33, 0.111, 0.457},
        {0.009, 0.299, 0.452, 0.25},
        {0.001, 0.292, 0.469, 0.245},
        {0.318, 0.387, 0.195, 0.1},
      },
      {
        {0.002, 0.134, 0.007, 0.861},
        {0, 0.205, 0.468, 0.375},
        {0.039, 0.412, 0.446, 0.104},
        {0.068, 0.32, 0.119, 0.495},
        {0, 0.274, 0.414, 0.332},
        {0, 0.278, 0.437, 0.295},
        {0.284, 0.389, 0.223, 0.104},
      },
    },
    {
      {
        {0.021, 0.053, 0.18, 0.75},
        {0, 0.011, 0.663, 0.338},
        {0.041, 0.309, 0.558, 0.092},
        {0.15, 0.086, 0.331, 0.438},
        {0, 0.058, 0.623, 0.32},
        {0, 0.013, 0.703, 0.285},
        {0.356, 0.343, 0.219, 0.082},
      },
      {
        {0.003, 0.019, 0.105, 0.874},
        {0, 0, 0.651, 0.386},
        {0.057, 0.366, 0.515, 0.062},
        {0.158, 0.044, 0.327, 0.475},
        {0, 0.011, 0.601, 0.405},
        {0, 0.001, 0.64, 0.361},
        {0.361, 0.361, 0.228, 0.05},
      },
    },
    {
      {
        {0.016, 0.14, 0.071, 0.776},
        {0, 0.094, 0.583, 0.342},
        {0.025, 0.385, 0.5, 0.09},
        {0.13, 0.232, 0.181, 0.46},
        {0.001, 0.215, 0.513, 0.279},
        {0, 0.144, 0.599, 0.259},
        {0.322, 0.379, 0.217, 0.082},
      },
      {
        {0.002, 0.101, 0.038, 0.861},
        {0, 0.049, 0.597, 0.387},
        {0.055, 0.374, 0.501, 0.07},
        {0.094, 0.21, 0.203, 0.493},
        {0, 0.145, 0.526, 0.344},
        {0, 0.099, 0.585, 0.326},
        {0.334, 0.368, 0.238, 0.06},
      },
    },
  },
  {
    {
      {
        {0.04, 0.095, 0.043, 0.827},
        {0.032, 0.181, 0.398, 0.434},
        {0.087, 0.355, 0.346, 0.214},
        {0.127, 0.249, 0.104, 0.524},
        {0.099, 0.243, 0.398, 0.278},
        {0.06, 0.288, 0.413, 0.247},
        {0.237, 0.287, 0.25, 0.226},
      },
      {
        {0.012, 0.069, 0.017, 0.904},
        {0.007, 0.169, 0.44, 0.477},
        {0.123, 0.317, 0.365, 0.195},
        {0.101, 0.218, 0.109, 0.575},
        {0.048, 0.248, 0.386, 0.336},
        {0.033, 0.248, 0.416, 0.314},
        {0.269, 0.264, 0.271, 0.196},
      },
    },
    {
      {
        {0.039, 0.047, 0.117, 0.798},
        {0.005, 0.032, 0.558, 0.429},
        {0.092, 0.261, 0.493, 0.155},
        {0.167, 0.118, 0.238, 0.481},
        {0.015, 0.134, 0.544, 0.316},
        {0.011, 0.073, 0.587, 0.331},
        {0.297, 0.258, 0.296, 0.149},
      },
      {
        {0.011, 0.023, 0.066, 0.902},
        {0, 0.005, 0.538, 0.493},
        {0.145, 0.306, 0.416, 0.134},
        {0.114, 0.113, 0.231, 0.549},
        {0.001, 0.056, 0.526, 0.448},
        {0, 0.014, 0.581, 0.414},
        {0.317, 0.281, 0.287, 0.115},
      },
    },
    {
      {
        {0.043, 0.094, 0.039, 0.828},
        {0.012, 0.148, 0.441, 0.438},
        {0.095, 0.306, 0.403, 0.196},
        {0.164, 0.198, 0.133, 0.507},
        {0.066, 0.233, 0.414, 0.3},
        {0.032, 0.206, 0.471, 0.297},
        {0.283, 0.273, 0.252, 0.192},
      },
      {
        {0.018, 0.035, 0.026, 0.923},
        {0.001, 0.098, 0.487, 0.483},
        {0.128, 0.32, 0.366, 0.186},
        {0.129, 0.161, 0.123, 0.591},
        {0.02, 0.228, 0.418, 0.363},
        {0.008, 0.189, 0.465, 0.353},
        {0.28, 0.284, 0.258, 0.179},
      },
    },
  },
  {
    {
      {
        {0.015, 0.235, 0.047, 0.708},
        {0.001, 0.262, 0.432, 0.332},
        {0.092, 0.407, 0.395, 0.106},
        {0.151, 0.345, 0.101, 0.406},
        {0.013, 0.27, 0.482, 0.245},
        {0.007, 0.285, 0.482, 0.23},
        {0.269, 0.342, 0.279, 0.11},
      },
      {
        {0.002, 0.152, 0.017, 0.831},
        {0, 0.247, 0.48, 0.324},
        {0.151, 0.363, 0.407, 0.079},
        {0.109, 0.325, 0.109, 0.46},
        {0, 0.291, 0.444, 0.284},
        {0, 0.309, 0.436, 0.26},
        {0.282, 0.33, 0.313, 0.075},
      },
    },
    {
      {
        {0.024, 0.059, 0.183, 0.736},
        {0, 0.024, 0.674, 0.309},
        {0.109, 0.264, 0.546, 0.081},
        {0.176, 0.127, 0.293, 0.404},
        {0, 0.093, 0.646, 0.27},
        {0, 0.027, 0.719, 0.259},
        {0.287, 0.28, 0.364, 0.07},
      },
      {
        {0.007, 0.023, 0.185, 0.788},
        {0, 0.002, 0.663, 0.37},
        {0.166, 0.311, 0.467, 0.056},
        {0.153, 0.08, 0.368, 0.4},
        {0, 0.013, 0.634, 0.365},
        {0, 0.002, 0.67, 0.332},
        {0.34, 0.264, 0.344, 0.052},
      },
    },
    {
      {
        {0.02, 0.16, 0.081, 0.741},
        {0, 0.13, 0.556, 0.331},
        {0.104, 0.342, 0.458, 0.096},
        {0.155, 0.244, 0.165, 0.438},
        {0.004, 0.245, 0.507, 0.258},
        {0, 0.174, 0.589, 0.244},
        {0.298, 0.31, 0.31, 0.082},
      },
      {
        {0.007, 0.105, 0.057, 0.836},
        {0, 0.087, 0.563, 0.386},
        {0.162, 0.333, 0.42, 0.086},
        {0.122, 0.225, 0.193, 0.462},
        {0, 0.171, 0.524, 0.324},
        {0, 0.103, 0.586, 0.319},
        {0.33, 0.292, 0.304, 0.074},
      },
    },
  },
  {
    {
      {
        {0.02, 0.086, 0.034, 0.863},
        {0.072, 0.213, 0.392, 0.369},
        {0.042, 0.358, 0.422, 0.179},
        {0.137, 0.222, 0.085, 0.558},
        {0.226, 0.263, 0.32, 0.201},
        {0.159, 0.306, 0.337, 0.204},
        {0.348, 0.281, 0.187, 0.186},
      },
      {
        {0.018, 0.073, 0.016, 0.895},
        {0.034, 0.21, 0.424, 0.399},
        {0.061, 0.354, 0.402, 0.183},
        {0.118, 0.193, 0.08, 0.616},
        {0.119, 0.311, 0.331, 0.251},
        {0.085, 0.309, 0.357, 0.261},
        {0.386, 0.276, 0.153, 0.185},
      },
    },
    {
      {
        {0.022, 0.05, 0.059, 0.871},
        {0.006, 0.065, 0.55, 0.409},
        {0.087, 0.136, 0.61, 0.167},
        {0.138, 0.1, 0.158, 0.607},
        {0.048, 0.217, 0.481, 0.265},
        {0.025, 0.153, 0.556, 0.268},
        {0.347, 0.209, 0.29, 0.155},
      },
      {
        {0.008, 0.018, 0.036, 0.941},
        {0, 0.014, 0.561, 0.487},
        {0.155, 0.143, 0.543, 0.159},
        {0.117, 0.076, 0.151, 0.659},
        {0.003, 0.124, 0.537, 0.361},
        {0.002, 0.07, 0.556, 0.384},
        {0.4, 0.176, 0.289, 0.136},
      },
    },
    {
      {
        {0.033, 0.073, 0.039, 0.856},
        {0.028, 0.18, 0.435, 0.394},
        {0.044, 0.247, 0.524, 0.185},
        {0.14, 0.176, 0.127, 0.558},
        {0.122, 0.267, 0.376, 0.246},
        {0.088, 0.241, 0.425, 0.252},
        {0.367, 0.268, 0.199, 0.167},
      },
      {
        {0.017, 0.056, 0.041, 0.887},
        {0.012, 0.147, 0.449, 0.46},
        {0.108, 0.235, 0.437, 0.22},
        {0.113, 0.158, 0.134, 0.599},
        {0.06, 0.319, 0.366, 0.28},
        {0.039, 0.277, 0.39, 0.303},
        {0.378, 0.253, 0.169, 0.2},
      },
    },
  },
  {
    {
      {
        {0.01, 0.194, 0.026, 0.773},
        {0.008, 0.241, 0.481, 0.288},
        {0.106, 0.452, 0.364, 0.078},
        {0.098, 0.288, 0.133, 0.481},
        {0.059, 0.313, 0.433, 0.205},
        {0.034, 0.31, 0.447, 0.214},
        {0.336, 0.424, 0.161, 0.079},
      },
      {
        {0.003, 0.105, 0.017, 0.878},
        {0, 0.22, 0.499, 0.346},
        {0.188, 0.428, 0.315, 0.069},
        {0.073, 0.297, 0.097, 0.534},
        {0.006, 0.337, 0.441, 0.229},
        {0.003, 0.347, 0.447, 0.212},
        {0.379, 0.413, 0.148, 0.06},
      },
    },
    {
      {
        {0.011, 0.063, 0.074, 0.853},
        {0, 0.049, 0.617, 0.344},
        {0.175, 0.14, 0.623, 0.063},
        {0.152, 0.075, 0.211, 0.567},
        {0.004, 0.201, 0.589, 0.214},
        {0, 0.125, 0.669, 0.211},
        {0.335, 0.177, 0.429, 0.059},
      },
      {
        {0.004, 0.02, 0.041, 0.937},
        {0, 0.011, 0.598, 0.443},
        {0.271, 0.155, 0.527, 0.047},
        {0.122, 0.054, 0.194, 0.631},
        {0, 0.082, 0.625, 0.319},
        {0, 0.036, 0.68, 0.288},
        {0.386, 0.169, 0.401, 0.044},
      },
    },
    {
      {
        {0.009, 0.107, 0.057, 0.83},
        {0.002, 0.169, 0.504, 0.347},
        {0.141, 0.3, 0.46, 0.1},
        {0.116, 0.16, 0.164, 0.562},
        {0.023, 0.378, 0.423, 0.182},
        {0.009, 0.3, 0.5, 0.197},
        {0.355, 0.357, 0.215, 0.074},
      },
      {
        {0.002, 0.047, 0.022, 0.929},
        {0, 0.079, 0.57, 0.394},
        {0.242, 0.322, 0.365, 0.071},
        {0.113, 0.151, 0.147, 0.59},
        {0.002, 0.255, 0.47, 0.291},
        {0, 0.189, 0.529, 0.286},
        {0.387, 0.342, 0.211, 0.06},
      },
    },
  },
  {
    {
      {
        {0.041, 0.109, 0.031, 0.823},
        {0.065, 0.235, 0.388, 0.366},
        {0.041, 0.393, 0.41, 0.156},
        {0.135, 0.197, 0.118, 0.553},
        {0.203, 0.269, 0.318, 0.226},
        {0.136, 0.303, 0.322, 0.241},
        {0.306, 0.311, 0.229, 0.154},
      },
      {
        {0.019, 0.075, 0.022, 0.888},
        {0.033, 0.228, 0.418, 0.402},
        {0.089, 0.362, 0.388, 0.162},
        {0.117, 0.196, 0.089, 0.604},
        {0.134, 0.299, 0.343, 0.238},
        {0.092, 0.308, 0.353, 0.256},
        {0.314, 0.301, 0.221, 0.164},
      },
    },
    {
      {
        {0.031, 0.064, 0.067, 0.841},
        {0.01, 0.077, 0.532, 0.407},
        {0.07, 0.138, 0.641, 0.152},
        {0.157, 0.112, 0.173, 0.561},
        {0.066, 0.274, 0.432, 0.241},
        {0.032, 0.191, 0.519, 0.264},
        {0.331, 0.183, 0.347, 0.14},
      },
      {
        {0.015, 0.026, 0.046, 0.916},
        {0, 0.039, 0.553, 0.47},
        {0.142, 0.172, 0.547, 0.139},
        {0.13, 0.068, 0.161, 0.648},
        {0.013, 0.175, 0.493, 0.342},
        {0.006, 0.12, 0.539, 0.346},
        {0.366, 0.19, 0.32, 0.124},
      },
    },
    {
      {
        {0.034, 0.089, 0.065, 0.813},
        {0.041, 0.193, 0.468, 0.351},
        {0.051, 0.314, 0.485, 0.15},
        {0.155, 0.157, 0.152, 0.539},
        {0.152, 0.277, 0.367, 0.213},
        {0.087, 0.284, 0.406, 0.233},
        {0.323, 0.297, 0.24, 0.142},
      },
      {
        {0.017, 0.063, 0.036, 0.885},
        {0.017, 0.153, 0.443, 0.451},
        {0.09, 0.279, 0.45, 0.181},
        {0.118, 0.162, 0.112, 0.611},
        {0.075, 0.329, 0.364, 0.256},
        {0.048, 0.293, 0.384, 0.286},
        {0.332, 0.269, 0.243, 0.157},
      },
    },
  },
  {
    {
      {
        {0.015, 0.206, 0.05, 0.735},
        {0.013, 0.291, 0.466, 0.257},
        {0.1, 0.452, 0.378, 0.071},
        {0.141, 0.28, 0.134, 0.448},
        {0.069, 0.326, 0.428, 0.19},
        {0.034, 0.375, 0.424, 0.174},
        {0.295, 0.433, 0.205, 0.068},
      },
      {
        {0.002, 0.149, 0.013, 0.841},
        {0.001, 0.262, 0.484, 0.311},
        {0.195, 0.422, 0.326, 0.057},
        {0.08, 0.3, 0.122, 0.501},
        {0.014, 0.345, 0.428, 0.232},
        {0.005, 0.345, 0.44, 0.219},
        {0.356, 0.391, 0.197, 0.056},
      },
    },
    {
      {
        {0.015, 0.072, 0.132, 0.784},
        {0, 0.066, 0.601, 0.357},
        {0.126, 0.142, 0.672, 0.062},
        {0.164, 0.085, 0.254, 0.5},
        {0.01, 0.3, 0.49, 0.212},
        {0.003, 0.189, 0.606, 0.208},
        {0.264, 0.193, 0.487, 0.058},
      },
      {
        {0.004, 0.029, 0.079, 0.891},
        {0, 0.02, 0.629, 0.4},
        {0.259, 0.175, 0.537, 0.03},
        {0.117, 0.058, 0.245, 0.584},
        {0, 0.128, 0.601, 0.286},
        {0, 0.076, 0.655, 0.276},
        {0.368, 0.189, 0.418, 0.026},
      },
    },
    {
      {
        {0.013, 0.146, 0.073, 0.768},
        {0.003, 0.21, 0.514, 0.299},
        {0.124, 0.327, 0.474, 0.076},
        {0.142, 0.18, 0.196, 0.485},
        {0.022, 0.4, 0.421, 0.167},
        {0.011, 0.316, 0.492, 0.184},
        {0.317, 0.344, 0.276, 0.063},
      },
      {
        {0.003, 0.071, 0.04, 0.887},
        {0, 0.103, 0.558, 0.381},
        {0.223, 0.295, 0.426, 0.056},
        {0.115, 0.161, 0.15, 0.577},
        {0.005, 0.314, 0.452, 0.242},
        {0.001, 0.238, 0.533, 0.233},
        {0.351, 0.314, 0.289, 0.046},
      },
    },
  },
};

const double kReducedSelection[2][2][7][3] = {
  {
    {
      {0.116, 0.705, 0.196},
      {0.057, 0.36, 0.648},
      {0.049, 0.487, 0.464},
      {0.221, 0.564, 0.226},
      {0.11, 0.303, 0.599},
      {0.068, 0.331, 0.605},
      {0.3, 0.453, 0.25},
    },
    {
      {0.078, 0.79, 0.139},
      {0.016, 0.359, 0.695},
      {0.042, 0.467, 0.491},
      {0.188, 0.598, 0.221},
      {0.064, 0.324, 0.62},
      {0.033, 0.34, 0.632},
      {0.31, 0.437, 0.255},
    },
  },
  {
    {
      {0.151, 0.246, 0.607},
      {0.003, 0.054, 0.951},
      {0.035, 0.274, 0.691},
      {0.29, 0.216, 0.5},
      {0.017, 0.124, 0.861},
      {0.009, 0.071, 0.92},
      {0.363, 0.391, 0.247},
    },
    {
      {0.071, 0.19, 0.743},
      {0, 0.006, 0.995},
      {0.049, 0.349, 0.602},
      {0.216, 0.172, 0.615},
      {0, 0.041, 0.96},
      {0, 0.012, 0.989},
      {0.303, 0.418, 0.279},
    },
  },
};

const double kMse[8][3][2][3][4] = {
  {
    {
      {
        {0.084, 0.083, 0.084, 0.093},
        {0.15, 0.148, 0.15, 0.154},
        {0.103, 0.1, 0.102, 0.116},
      },
      {
        {0.04, 0.041, 0.042, 0.042},
        {0.07, 0.067, 0.068, 0.07},
        {0.05, 0.047, 0.049, 0.049},
      },
    },
    {
      {
        {0.113, 0.113, 0.11, 0.124},
        {0.199, 0.199, 0.198, 0.214},
        {0.107, 0.105, 0.099, 0.112},
      },
      {
        {0.054, 0.053, 0.052, 0.056},
        {0.09, 0.091, 0.09, 0.097},
        {0.049, 0.047, 0.045, 0.048},
      },
    },
    {
      {
        {0.094, 0.094, 0.094, 0.105},
        {0.169, 0.167, 0.169, 0.182},
        {0.103, 0.098, 0.099, 0.112},
      },
      {
        {0.049, 0.048, 0.048, 0.05},
        {0.083, 0.083, 0.084, 0.086},
        {0.053, 0.05, 0.05, 0.052},
      },
    },
  },
  {
    {
      {
        {0.109, 0.098, 0.104, 0.109},
        {0.204, 0.198, 0.202, 0.215},
        {0.116, 0.089, 0.105, 0.101},
      },
      {
        {0.05, 0.048, 0.051, 0.052},
        {0.1, 0.096, 0.1, 0.102},
        {0.05, 0.038, 0.043, 0.041},
      },
    },
    {
      {
        {0.157, 0.156, 0.149, 0.164},
        {0.296, 0.3, 0.293, 0.317},
        {0.108, 0.09, 0.079, 0.084},
      },
      {
        {0.073, 0.071, 0.07, 0.079},
        {0.134, 0.135, 0.132, 0.14},
        {0.057, 0.045, 0.04, 0.042},
      },
    },
    {
      {
        {0.139, 0.134, 0.135, 0.155},
        {0.241, 0.238, 0.24, 0.265},
        {0.115, 0.09, 0.095, 0.104},
      },
      {
        {0.058, 0.056, 0.057, 0.059},
        {0.117, 0.115, 0.117, 0.124},
        {0.051, 0.041, 0.042, 0.043},
      },
    },
  },
  {
    {
      {
        {0.101, 0.094, 0.1, 0.113},
        {0.159, 0.164, 0.16, 0.171},
        {0.115, 0.12, 0.114, 0.128},
      },
      {
        {0.05, 0.046, 0.047, 0.049},
        {0.08, 0.08, 0.081, 0.085},
        {0.05, 0.052, 0.052, 0.055},
      },
    },
    {
      {
        {0.111, 0.111, 0.108, 0.119},
        {0.205, 0.206, 0.203, 0.209},
        {0.129, 0.128, 0.121, 0.136},
      },
      {
        {0.054, 0.054, 0.052, 0.056},
        {0.094, 0.095, 0.095, 0.101},
        {0.055, 0.052, 0.05, 0.053},
      },
    },
    {
      {
        {0.106, 0.104, 0.104, 0.112},
        {0.182, 0.183, 0.182, 0.196},
        {0.115, 0.111, 0.11, 0.118},
      },
      {
        {0.05, 0.049, 0.049, 0.051},
        {0.087, 0.087, 0.087, 0.091},
        {0.054, 0.05, 0.052, 0.052},
      },
    },
  },
  {
    {
      {
        {0.135, 0.126, 0.131, 0.136},
        {0.231, 0.219, 0.227, 0.237},
        {0.119, 0.097, 0.105, 0.108},
      },
      {
        {0.06, 0.052, 0.054, 0.055},
        {0.11, 0.104, 0.106, 0.108},
        {0.06, 0.049, 0.055, 0.053},
      },
    },
    {
      {
        {0.159, 0.149, 0.145, 0.158},
        {0.31, 0.311, 0.3, 0.322},
        {0.117, 0.093, 0.084, 0.09},
      },
      {
        {0.075, 0.072, 0.069, 0.076},
        {0.14, 0.14, 0.133, 0.148},
        {0.059, 0.049, 0.042, 0.048},
      },
    },
    {
      {
        {0.13, 0.122, 0.124, 0.129},
        {0.252, 0.245, 0.249, 0.255},
        {0.115, 0.094, 0.095, 0.103},
      },
      {
        {0.065, 0.063, 0.062, 0.068},
        {0.11, 0.11, 0.109, 0.115},
        {0.057, 0.044, 0.046, 0.045},
      },
    },
  },
  {
    {
      {
        {0.005, 0.009, 0.008, 0.005},
        {0.006, 0.006, 0.006, 0.007},
        {0.005, 0.005, 0.005, 0.005},
      },
      {
        {0, 0.002, 0.002, 0.002},
        {0, 0.003, 0.003, 0.003},
        {0, 0.002, 0.002, 0.002},
      },
    },
    {
      {
        {0.006, 0.02, 0.007, 0.007},
        {0.008, 0.008, 0.008, 0.008},
        {0.005, 0.007, 0.005, 0.005},
      },
      {
        {0.003, 0.003, 0.004, 0.003},
        {0.004, 0.004, 0.004, 0.004},
        {0.002, 0.002, 0.002, 0.002},
      },
    },
    {
      {
        {0.006, 0.019, 0.007, 0.006},
        {0.006, 0.007, 0.006, 0.007},
        {0.005, 0.006, 0.005, 0.005},
      },
      {
        {0.003, 0.003, 0.003, 0.003},
        {0.003, 0.003, 0.003, 0.003},
        {0.002, 0.002, 0.002, 0.002},
      },
    },
  },
  {
    {
      {
        {0.006, 0.026, 0.012, 0.006},
        {0.008, 0.009, 0.008, 0.009},
        {0.004, 0.007, 0.005, 0.004},
      },
      {
        {0, 0.006, 0.005, 0.003},
        {0, 0.004, 0.004, 0.004},
        {0, 0.002, 0.002, 0.002},
      },
    },
    {
      {
        {0.008, 0.03, 0.01, 0.009},
        {0.012, 0.012, 0.011, 0.013},
        {0.004, 0.007, 0.004, 0.004},
      },
      {
        {0.004, 0.014, 0.005, 0.004},
        {0.006, 0.006, 0.006, 0.006},
        {0.002, 0.003, 0.002, 0.002},
      },
    },
    {
      {
        {0.008, 0.029, 0.009, 0.008},
        {0.011, 0.011, 0.011, 0.011},
        {0.004, 0.007, 0.004, 0.004},
      },
      {
        {0.004, 0.005, 0.004, 0.004},
        {0.005, 0.005, 0.005, 0.005},
        {0.002, 0.002, 0.002, 0.002},
      },
    },
  },
  {
    {
      {
        {0.006, 0.012, 0.005, 0.006},
        {0.006, 0.007, 0.006, 0.008},
        {0.005, 0.006, 0.005, 0.006},
      },
      {
        {0, 0.005, 0.003, 0.003},
        {0, 0.003, 0.003, 0.003},
        {0, 0.002, 0.002, 0.002},
      },
    },
    {
      {
        {0.006, 0.02, 0.009, 0.007},
        {0.009, 0.009, 0.009, 0.009},
        {0.004, 0.006, 0.004, 0.005},
      },
      {
        {0.003, 0.01, 0.003, 0.003},
        {0.004, 0.004, 0.004, 0.004},
        {0.003, 0.004, 0.002, 0.003},
      },
    },
    {
      {
        {0.006, 0.026, 0.007, 0.006},
        {0.007, 0.008, 0.007, 0.008},
        {0.005, 0.007, 0.005, 0.005},
      },
      {
        {0.003, 0.004, 0.003, 0.003},
        {0.004, 0.004, 0.004, 0.004},
        {0.002, 0.002, 0.002, 0.003},
      },
    },
  },
  {
    {
      {
        {0.007, 0.029, 0.01, 0.008},
        {0.008, 0.009, 0.008, 0.009},
        {0.005, 0.007, 0.005, 0.005},
      },
      {
        {0, 0.012, 0.004, 0.003},
        {0, 0.004, 0.004, 0.004},
        {0, 0.003, 0.002, 0.002},
      },
    },
    {
      {
        {0.009, 0.029, 0.013, 0.009},
        {0.012, 0.013, 0.012, 0.013},
        {0.005, 0.007, 0.004, 0.004},
      },
      {
        {0.005, 0.015, 0.009, 0.004},
        {0.006, 0.006, 0.006, 0.006},
        {0.002, 0.004, 0.003, 0.002},
      },
    },
    {
      {
        {0.008, 0.034, 0.01, 0.008},
        {0.011, 0.011, 0.011, 0.012},
        {0.005, 0.008, 0.004, 0.005},
      },
      {
        {0.004, 0.007, 0.004, 0.004},
        {0.005, 0.005, 0.005, 0.005},
        {0.002, 0.002, 0.002, 0.002},
      },
    },
  },
};

}  // namespace geepress::reference
