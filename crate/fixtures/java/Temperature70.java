import java.util.Arrays;

public class Temperature70 {
	public static int abs(int num) {
		return num < 0 ? -num : num;
	}

	static void sortArray(int[] arr) {
		for (int j = 0; j < arr.length - 1; j++) {
			for (int m = 0; m < arr.length - 1 - j; m++) {
				if (arr[m] > arr[m + 1]) {
					int tmp = arr[m];
					arr[m] = arr[m + 1];
					arr[m + 1] = tmp;
				}
			}
		}
	}

	public static double bodyMassIndex(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static void main(String[] args) {
		int[] numbers = {5, 8, 4, 6};
		System.out.println(abs(-24));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("BMI: " + bodyMassIndex(79.5, 1.68));
	}
}
